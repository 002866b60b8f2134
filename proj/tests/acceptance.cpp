// Acceptance suite. Each criterion prints one line:
//   criterion N PASS|FAIL <seconds>s <detail>
// and fails when its check fails or it runs past its time budget.

#include "ffgrid/bridge.hpp"
#include "ffgrid/campaign.hpp"
#include "ffgrid/first_fit.hpp"
#include "ffgrid/gds.hpp"
#include "ffgrid/generators.hpp"
#include "ffgrid/latin.hpp"
#include "ffgrid/ordering.hpp"

#include <CLI11.hpp>

#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace ffgrid;

namespace {

struct Verdict {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    double budget_seconds;
    std::function<Verdict()> run;
};

constexpr std::uint64_t seed = 20240601;
constexpr double closed_form_tolerance = 1e-6; // relative to n^2
constexpr int claimed_k3_quasi_lex = 26;

std::string first_problem(const CampaignReport& r)
{
    return r.problems.empty() ? std::string() : "; first: " + r.problems.front();
}

Verdict from_campaign(const CampaignReport& r, const std::string& what)
{
    std::ostringstream out;
    out << what << ": " << r.instances << " instances, " << r.failures << " failures" << first_problem(r);
    return {r.passed(), out.str()};
}

CampaignReport campaign(const std::string& id, std::optional<std::uint64_t> samples = {},
                        std::optional<int> vmax = {})
{
    CampaignConfig c;
    c.id = id;
    c.seed = seed;
    c.samples = samples;
    c.vmax = vmax;
    return run_campaign(c);
}

Graph rook(int m, int n)
{
    return cartesian_product(complete_graph(m), complete_graph(n)).graph();
}

Verdict xor_table_eight()
{
    const std::vector<std::vector<int>> expected{
        {1, 2, 3, 4, 5, 6, 7, 8}, {2, 1, 4, 3, 6, 5, 8, 7}, {3, 4, 1, 2, 7, 8, 5, 6}, {4, 3, 2, 1, 8, 7, 6, 5},
        {5, 6, 7, 8, 1, 2, 3, 4}, {6, 5, 8, 7, 2, 1, 4, 3}, {7, 8, 5, 6, 3, 4, 1, 2}, {8, 7, 6, 5, 4, 3, 2, 1}};
    const bool table = cayley_table(3).to_rows() == expected;
    const Coloring ff = first_fit(rook(8, 8), Ordering::identity(64));
    bool replay = true;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            replay = replay && ff.color(i * 8 + j) == expected[i][j];
    return {table && replay, std::string("cayley table ") + (table ? "matches" : "differs") + ", K8 box K8 replay "
                                 + (replay ? "matches" : "differs")};
}

Verdict power_formula()
{
    for (int n = 1; n <= 32; ++n) {
        const int k = first_fit(rook(n, n), Ordering::identity(n * n)).num_colors();
        const int expected = static_cast<int>(std::bit_ceil(static_cast<unsigned>(n)));
        if (k != expected)
            return {false, "n = " + std::to_string(n) + ": " + std::to_string(k) + " colours, expected "
                               + std::to_string(expected)};
    }
    return {true, "FF(K_n box K_n, lex) = 2^ceil(log2 n) for n = 1..32"};
}

Verdict quasi_lex()
{
    std::mt19937_64 rng(seed);
    std::ostringstream detail;
    bool ok = true;
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        const OrderedGraph g(complete_graph(m));
        const OrderedGraph h(complete_graph(n));
        const Graph prod = rook(m, n);
        const Ordering lex = Ordering::identity(m * n);
        std::vector<Coloring> targets{first_fit(prod, lex)};
        for (int i = 0; i < 4; ++i)
            targets.push_back(random_proper_coloring(prod, rng));
        std::uint64_t orderings = 0, sets = 0;
        for (const Coloring& target : targets) {
            std::vector<std::vector<int>> tested{{}, minimum_gds(prod, lex, target).domain};
            for (int i = 0; i < 6; ++i) {
                std::vector<int> s;
                for (int v = 0; v < m * n; ++v)
                    if (rng() % 2)
                        s.push_back(v);
                tested.push_back(s);
            }
            for (const auto& s : tested) {
                const QuasiLexGdsCheck check = check_quasi_lex_gds_equivalence(g, h, target, s);
                orderings = check.orderings;
                ++sets;
                if (!check.holds()) {
                    ok = false;
                    detail << "K" << m << " box K" << n << ": " << check.failures.front() << "; ";
                }
            }
        }
        detail << "K" << m << " box K" << n << " " << orderings << " orderings x " << sets << " sets";
        if (m == 3 && n == 3)
            detail << " (claimed " << claimed_k3_quasi_lex << ")";
        detail << "; ";
    }
    std::string text = detail.str();
    text.resize(text.size() - 2);
    return {ok, text};
}

Verdict l2_exact()
{
    const LatinRectangle l2 = tensor_square(2);
    const LatinInstance inst = latin_instance(l2);
    const auto cells = dk_construct(2);
    std::vector<int> domain;
    for (auto [i, j] : cells)
        domain.push_back(l2.index(i, j));
    const bool dk_ok = cells.size() == 6 && is_gds(inst.product.graph(), inst.lex, l2.as_coloring(), domain);
    const GdsCertificate minimum = minimum_gds(inst.product.graph(), inst.lex, l2.as_coloring());
    const int lower = 6 * 16 / 16;
    const bool min_ok = minimum.verified && static_cast<int>(minimum.domain.size()) == lower;
    return {dk_ok && min_ok, "|D_2| = " + std::to_string(cells.size()) + (dk_ok ? " verified" : " NOT verified")
                                 + ", minimum GDS of L_2 = " + std::to_string(minimum.domain.size())
                                 + ", 6n^2/16 = " + std::to_string(lower)};
}

// d_k = 4^k - b_k with b_0 = 1, b_1 = 3, b_k = b_(k-1) + 7 b_(k-2); an
// independent closed series for the recurrence.
std::uint64_t dk_series(int k)
{
    std::uint64_t b0 = 1, b1 = 3;
    if (k == 0)
        return 0;
    for (int i = 2; i <= k; ++i) {
        const std::uint64_t b2 = b1 + 7 * b0;
        b0 = b1;
        b1 = b2;
    }
    return (std::uint64_t{1} << 2 * k) - b1;
}

Verdict dk_counts()
{
    std::ostringstream detail;
    bool ok = true;
    detail << "sizes";
    for (int k = 0; k <= 5; ++k) {
        const auto cells = dk_construct(k);
        const std::uint64_t expected = dk_series(k);
        detail << ' ' << cells.size();
        ok = ok && cells.size() == expected && dk_count(k) == expected;
        if (k <= 4) {
            const LatinRectangle l = tensor_square(k);
            const LatinInstance inst = latin_instance(l);
            std::vector<int> domain;
            for (auto [i, j] : cells)
                domain.push_back(l.index(i, j));
            if (!is_gds(inst.product.graph(), inst.lex, l.as_coloring(), domain)) {
                ok = false;
                detail << "(D_" << k << " not a GDS)";
            }
        }
    }
    double worst = 0;
    for (int k = 0; k <= 20; ++k) {
        const double n2 = std::ldexp(1.0, 2 * k);
        worst = std::max(worst, std::abs(dk_closed_form(k) - static_cast<double>(dk_count(k))) / n2);
    }
    ok = ok && worst <= closed_form_tolerance;
    detail << "; D_0..D_4 replay-verified; closed form max error " << std::scientific << std::setprecision(2) << worst
           << " n^2 for k <= 20; d_k/n^2:";
    detail << std::fixed << std::setprecision(4);
    for (int k = 1; k <= 10; ++k)
        detail << ' ' << static_cast<double>(dk_count(k)) / std::ldexp(1.0, 2 * k);
    return {ok, detail.str()};
}

Verdict square_cover()
{
    std::mt19937_64 rng(seed);
    int over = 0, unverified = 0;
    std::ostringstream detail;
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + i % 4;
        const LatinRectangle r = random_latin_rectangle(n, n, rng);
        const CoverGdsResult c = rectangle_gds_via_cover(r);
        unverified += !c.certificate.verified;
        over += static_cast<double>(c.certificate.domain.size()) > std::floor(rectangle_gds_bound(n, n));
    }
    int augmented = 0, rect_over = 0;
    for (int i = 0; i < 100; ++i) {
        const int q = 3 + i % 4;
        const int p = 2 + static_cast<int>(rng() % (q - 2));
        const CoverGdsResult c = rectangle_gds_via_cover(random_latin_rectangle(p, q, rng));
        augmented += c.augmented > 0;
        rect_over += static_cast<double>(c.certificate.domain.size()) > std::floor(rectangle_gds_bound(p, q));
    }
    detail << "200 squares of order 3..6: " << unverified << " unverified, " << over
           << " over the bound; 100 rectangles p < q (reported only): " << augmented << " needed augmentation, "
           << rect_over << " over the bound";
    return {over == 0 && unverified == 0, detail.str()};
}

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {1, 1, xor_table_eight},
        {2, 5, power_formula},
        {3, 120, [] { return from_campaign(campaign("P1"), "witnesses and K_n box K_n searches"); }},
        {4, 300, [] { return from_campaign(campaign("T3", {}, 4), "ordered factor pairs on <= 4 vertices"); }},
        {5, 60, quasi_lex},
        {6, 120, l2_exact},
        {7, 180, dk_counts},
        {8, 300, [] { return from_campaign(campaign("T6", 1000), "random products with proper colourings"); }},
        {9, 300, square_cover},
        {10, 300, [] { return from_campaign(campaign("T4", {}, 4), "Grundy bounds on the criterion 4 pairs"); }},
    };
    return all;
}

bool run(const Criterion& c)
{
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = c.run();
    } catch (const std::exception& e) {
        v = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
        v.ok = false;
        v.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    std::cout << "criterion " << c.id << ' ' << (v.ok ? "PASS" : "FAIL") << ' ' << std::fixed
              << std::setprecision(2) << seconds << "s " << v.detail << std::endl;
    return v.ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ffgrid acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    for (const auto& c : criteria())
        if (only == 0 || c.id == only)
            ok = run(c) && ok;
    return ok ? 0 : 1;
}
