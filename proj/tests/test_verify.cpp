#include "test_support.hpp"

#include <sgspec/charpoly.hpp>
#include <sgspec/verify/checkers.hpp>
#include <sgspec/verify/report_io.hpp>

#include <cmath>
#include <numbers>

using namespace sgspec;
using namespace sgspec::verify;

namespace {

SignedGraph c4(Sign closing = Sign::plus) {
    return generate(Family::cycle, 4, signature::Explicit{{Sign::plus, Sign::plus, Sign::plus, closing}});
}
SignedGraph k(int n, Sign s) { return generate(Family::complete, n, s == Sign::plus ? SignatureRule{signature::AllPlus{}} : SignatureRule{signature::AllMinus{}}); }
SignedGraph path(int n) { return generate(Family::path, n, signature::AllPlus{}); }
SignedGraph star(int n) { return generate(Family::star, n, signature::AllPlus{}); }

const std::vector<double>& spec(const InterlacingReport& r, const char* name) {
    const auto* s = r.spectrum(name);
    EXPECT_NE(s, nullptr) << name;
    static const std::vector<double> none;
    return s ? s->values : none;
}

void expect_holds(const InterlacingReport& r) {
    EXPECT_TRUE(r.hypothesis_met) << r.note;
    EXPECT_TRUE(r.holds) << to_string(r.theorem) << " slack " << r.worst_slack << " at " << r.witness_position
                         << " " << r.witness_relation << " on " << r.graph;
}

void expect_gated(const InterlacingReport& r) {
    EXPECT_FALSE(r.hypothesis_met);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.note.empty());
    EXPECT_TRUE(r.spectra.empty());
}

// Spectra in a report cross-checked against the exact oracle.
void expect_oracle_spectrum(const std::vector<double>& got, const RealMatrix& m) {
    sgtest::expect_values_near(got, charpoly_spectrum_oracle(m).values, 1e-9);
}

} // namespace

// ---------------------------------------------------------------------------
// check_chain

TEST(CheckChain, Examples) {
    const std::vector<double> z{0, 0, 0}, o{1, 1, 1}, t{2, 2, 2};
    auto r = check_chain(z, o, t, 1e-9);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.worst_slack, 1.0);

    r = check_chain(o, o, o, 0.0);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.worst_slack, 0.0);

    const std::vector<double> mid{1, 2.5, 1};
    r = check_chain(z, mid, t, 1e-9);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.witness_position, 2);
    EXPECT_EQ(r.worst_slack, -0.5);
}

TEST(CheckChain, LengthMismatch) {
    const std::vector<double> a{0, 0}, b{0};
    try {
        check_chain(a, b, a, 0.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
}

TEST(CheckChain, ShrinkingToleranceNeverRescues) {
    SplitMix64 rng(4);
    for (int t = 0; t < 2000; ++t) {
        const int n = rng.between(1, 6);
        std::vector<double> lo(n), mid(n), hi(n);
        for (int i = 0; i < n; ++i) {
            mid[i] = rng.uniform();
            lo[i] = mid[i] - (rng.uniform() - 0.1) * 0.01;
            hi[i] = mid[i] + (rng.uniform() - 0.1) * 0.01;
        }
        const double big = 0.01 * rng.uniform(), small = big * rng.uniform();
        if (!check_chain(lo, mid, hi, big).holds) {
            EXPECT_FALSE(check_chain(lo, mid, hi, small).holds);
        }
    }
}

// ---------------------------------------------------------------------------
// Laplacian checkers

TEST(T2_1, BalancedC4) {
    for (Vertex v = 0; v < 4; ++v) {
        const auto r = check_T2_1(c4(), v);
        expect_holds(r);
        sgtest::expect_values_near(spec(r, "alpha"), {0, 2, 2, 4}, 1e-12);
        sgtest::expect_values_near(spec(r, "beta"), {0, 1, 3}, 1e-12);
        EXPECT_NEAR(r.worst_slack, 0.0, 1e-12); // 2 <= 2 at p = 2
    }
}

TEST(T2_1, K2) {
    const auto r = check_T2_1(k(2, Sign::plus), 0);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 2}, 1e-14);
    sgtest::expect_values_near(spec(r, "beta"), {0}, 0.0);
    EXPECT_EQ(r.surgery, "v=0");
}

TEST(T2_1, Errors) {
    try {
        check_T2_1(c4(), 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::VertexOutOfRange);
    }
}

TEST(C2_2, Examples) {
    auto r = check_C2_2(star(4), 0);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 1, 1, 4}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 0, 0}, 0.0);

    r = check_C2_2(k(3, Sign::plus), 1);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 3, 3}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 2}, 1e-12);

    expect_gated(check_C2_2(path(3), 0));
}

TEST(L2_3, Examples) {
    auto r = check_L2_3(k(3, Sign::plus), 0, 2);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 3, 3}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 1, 3}, 1e-12);

    r = check_L2_3(k(2, Sign::plus), 0, 1);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "beta"), {0, 0}, 0.0);

    try {
        check_L2_3(path(3), 0, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoSuchEdge);
    }
}

TEST(T2_4, Examples) {
    const std::vector<Sign> plus4(4, Sign::plus);
    auto r = check_T2_4(3, plus4, Sign::plus);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 2, 2, 4}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 3, 3}, 1e-12);

    r = check_T2_4(3, plus4, Sign::minus);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "beta"), {1, 1, 4}, 1e-12);
    EXPECT_EQ(r.derived_graph, "n 3; 0 1 +; 0 2 -; 1 2 +");
}

TEST(T2_4, AllSignaturesSmallCycles) {
    for (int m = 3; m <= 6; ++m)
        for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask)
            for (Sign last : {Sign::plus, Sign::minus}) expect_holds(check_T2_4(m, sgtest::signs_from_mask(mask, m + 1), last));
}

TEST(T2_4, Errors) {
    try {
        check_T2_4(2, std::vector<Sign>(3, Sign::plus), Sign::plus);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadOrder);
    }
}

TEST(C2_5, SeededDraws) {
    int minus_branch = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int m = 3 + static_cast<int>(seed % 9);
        const auto r = check_C2_5(m, seed);
        expect_holds(r);
        ASSERT_EQ(r.flags.size(), 1u);
        if (r.flags[0] == "closing_sign=-") ++minus_branch;
    }
    EXPECT_GT(minus_branch, 100);
    EXPECT_LT(minus_branch, 400);
}

TEST(C2_5, ClosingSignMatchesBalanceOfDrawnCycle) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto r = check_C2_5(5, seed);
        const auto small = parse_sg(r.derived_graph);
        // Drop vertex 5 of C_6 and close 0..4 with the flagged sign.
        const Sign closing = r.flags[0] == "closing_sign=+" ? Sign::plus : Sign::minus;
        const auto reduced = add_edge(delete_vertex(parse_sg(r.graph), 5).graph, 0, 4, closing);
        EXPECT_EQ(is_balanced(reduced), is_balanced(small));
        EXPECT_TRUE(switching_equivalent(reduced, small));
        // Laplacian spectra of switching-equivalent cycles coincide.
        sgtest::expect_values_near(spec(r, "beta"), closed_form_cycle_spectrum(5, is_balanced(small)).values, 1e-10);
    }
}

TEST(T2_7, Examples) {
    auto r = check_T2_7(path(4), 0);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 2 - std::numbers::sqrt2, 2, 2 + std::numbers::sqrt2}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 1, 3}, 1e-12);

    for (Vertex u : {0, 1}) {
        r = check_T2_7(k(2, Sign::minus), u);
        expect_holds(r);
        sgtest::expect_values_near(spec(r, "alpha"), {0, 2}, 1e-14);
        EXPECT_EQ(r.flags, std::vector<std::string>{"pendant_sign=-"});
    }
    expect_holds(check_T2_7(star(5), 3));
    expect_gated(check_T2_7(star(5), 0));
}

TEST(C2_8_C2_9, AllPositiveExamples) {
    // Verified on the fixed all-positive trees; random signatures follow by switching.
    const auto a = eigenvalues(laplacian(path(3))), b = eigenvalues(laplacian(path(2)));
    sgtest::expect_values_near(a.values, {0, 1, 3}, 1e-12);
    sgtest::expect_values_near(b.values, {0, 2}, 1e-12);
    const auto sa = eigenvalues(laplacian(star(4))), sb = eigenvalues(laplacian(star(3)));
    sgtest::expect_values_near(sa.values, {0, 1, 1, 4}, 1e-12);
    sgtest::expect_values_near(sb.values, {0, 1, 3}, 1e-12);
}

TEST(C2_8_C2_9, RandomTreeSignatures) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int m = 2 + static_cast<int>(seed % 10);
        auto r = check_C2_8_C2_9(TreeKind::path, m, seed);
        EXPECT_EQ(r.theorem, TheoremId::C2_8);
        expect_holds(r);
        sgtest::expect_values_near(spec(r, "alpha"), closed_form_path_spectrum(m + 1).values, 1e-10);
        r = check_C2_8_C2_9(TreeKind::star, m, seed);
        EXPECT_EQ(r.theorem, TheoremId::C2_9);
        expect_holds(r);
    }
}

// ---------------------------------------------------------------------------
// Net-Laplacian checkers

TEST(L3_1, Examples) {
    SplitMix64 rng(8);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_signed_graph(rng.between(1, 9), 0.5, 0.0, rng.next());
        const auto r = check_L3_1(g);
        expect_holds(r);
        sgtest::expect_values_near(spec(r, "alpha"), spec(r, "beta"), 1e-12);
    }
    const auto r = check_L3_1(k(2, Sign::minus));
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 2}, 1e-14);
    sgtest::expect_values_near(spec(r, "beta"), {-2, 0}, 1e-14);
    EXPECT_NEAR(r.worst_slack, 0.0, 1e-14);
}

TEST(L3_1, UniformNegativeDegreeIsExactShift) {
    for (int n = 2; n <= 8; ++n) {
        const auto r = check_L3_1(k(n, Sign::minus));
        expect_holds(r);
        const auto& a = spec(r, "alpha");
        const auto& b = spec(r, "beta");
        for (std::size_t p = 0; p < a.size(); ++p) EXPECT_NEAR(a[p] - b[p], 2.0 * (n - 1), 1e-9 * n);
    }
}

TEST(T3_2, Examples) {
    auto r = check_T3_2(k(2, Sign::minus), 0, 1);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {-2, 0}, 1e-14);
    sgtest::expect_values_near(spec(r, "beta"), {0, 0}, 0.0);

    const auto tri = build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::minus}});
    r = check_T3_2(tri, 0, 2);
    expect_holds(r);
    expect_oracle_spectrum(spec(r, "alpha"), net_laplacian(tri));

    expect_gated(check_T3_2(tri, 0, 1));
    expect_gated(check_T3_2(path(3), 0, 2)); // not an edge
}

TEST(T3_3, Examples) {
    auto r = check_T3_3(k(2, Sign::plus), 0, 1);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 2}, 1e-14);
    r = check_T3_3(c4(), 0, 1);
    expect_holds(r);
    expect_gated(check_T3_3(k(2, Sign::minus), 0, 1));
    expect_gated(check_T3_3(path(3), 0, 2)); // not an edge
}

TEST(T3_4, Examples) {
    auto r = check_T3_4(c4(), 0);
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 2, 2, 4}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 1, 3}, 1e-12);

    const auto unb = build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::minus}});
    r = check_T3_4(unb, 1);
    expect_holds(r);
    expect_oracle_spectrum(spec(r, "alpha"), net_laplacian(unb));

    expect_gated(check_T3_4(build_graph(4, {{0, 1, Sign::plus}, {2, 3, Sign::plus}}), 0));
}

TEST(T3_4, AgreesWithT2_1OnAllPositiveGraphs) {
    SplitMix64 rng(19);
    for (int t = 0; t < 200; ++t) {
        const int n = rng.between(2, 10);
        const auto g = with_uniform_sign(random_signed_graph(n, 0.6, 0.0, rng.next()), Sign::plus);
        if (!is_connected(g)) continue;
        const Vertex v = rng.between(0, n - 1);
        const auto a = check_T2_1(g, v), b = check_T3_4(g, v);
        EXPECT_EQ(a.holds, b.holds);
        EXPECT_EQ(spec(a, "alpha"), spec(b, "alpha"));
    }
}

TEST(C3_5_C3_6, Branches) {
    auto r = check_C3_5_C3_6(k(4, Sign::plus), 2);
    EXPECT_EQ(r.theorem, TheoremId::C3_5);
    expect_holds(r);

    const auto neg_star = generate(Family::star, 4, signature::AllMinus{});
    r = check_C3_5_C3_6(neg_star, 0);
    EXPECT_EQ(r.theorem, TheoremId::C3_6);
    expect_holds(r);

    const auto mixed = build_graph(3, {{0, 1, Sign::plus}, {0, 2, Sign::minus}});
    expect_gated(check_C3_5_C3_6(mixed, 0));
    expect_gated(check_C3_5(mixed, 0));
    expect_gated(check_C3_6(mixed, 0));
}

// ---------------------------------------------------------------------------
// C3.7: the outer links do not hold in general; the middle links do.

TEST(C3_7, GateRequiresCompleteCoRegular) {
    expect_gated(check_C3_7(c4(), 0));
    expect_gated(check_C3_7(build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::minus}}), 0));
}

TEST(C3_7, AllPositiveK3Counterexample) {
    const auto r = check_C3_7(k(3, Sign::plus), 0);
    EXPECT_TRUE(r.hypothesis_met);
    EXPECT_FALSE(r.holds);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 3, 3}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 2}, 1e-12);
    sgtest::expect_values_near(spec(r, "mu"), {0, 2}, 1e-12);
    EXPECT_NEAR(r.worst_slack, -1.0, 1e-12); // alpha_2 = 3 > beta_2 = 2
    EXPECT_EQ(r.witness_position, 1);
    EXPECT_EQ(r.witness_relation, "alpha_{p+1} <= beta_{p+1} + 2s");
}

TEST(C3_7, AllNegativeK3Counterexample) {
    const auto r = check_C3_7(k(3, Sign::minus), 1);
    EXPECT_TRUE(r.hypothesis_met);
    EXPECT_FALSE(r.holds);
    sgtest::expect_values_near(spec(r, "alpha"), {-3, -3, 0}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {-2, 0}, 1e-12);
    // beta_2 + 4 = 4 against alpha_2 = -3.
    EXPECT_NEAR(r.worst_slack, -7.0, 1e-12);
    EXPECT_EQ(r.witness_position, 2);
    EXPECT_EQ(r.witness_relation, "beta_p + 2s <= alpha_p");
}

TEST(C3_7, AllPositiveK4) {
    const auto r = check_C3_7(k(4, Sign::plus), 3);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 4, 4, 4}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 3, 3}, 1e-12);
    EXPECT_FALSE(r.holds);
    EXPECT_NEAR(r.worst_slack, -1.0, 1e-12);
}

TEST(C3_7, MiddleLinksHoldOnCompleteCoRegularGraphs) {
    // alpha_p <= mu_p + 1 - 2s <= alpha_{p+1}, from N(g) = L(g) - 2sI and
    // vertex-deletion interlacing for L.
    SplitMix64 rng(37);
    for (int t = 0; t < 300; ++t) {
        const int n = rng.between(3, 10);
        std::vector<char> neg(static_cast<std::size_t>(n / 2 + 1));
        for (auto& x : neg) x = rng.bernoulli(0.5);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.push_back({i, j, neg[std::min(j - i, n - j + i)] ? Sign::minus : Sign::plus});
        const SignedGraph g(n, edges);
        const auto r = check_C3_7(g, rng.between(0, n - 1));
        ASSERT_TRUE(r.hypothesis_met);
        const int s = min_max_neg_degree(g).min;
        const auto& a = spec(r, "alpha");
        const auto& mu = spec(r, "mu");
        for (std::size_t p = 0; p < mu.size(); ++p) {
            const double mid = mu[p] + 1 - 2 * s;
            EXPECT_LE(a[p], mid + 1e-9 * n);
            EXPECT_LE(mid, a[p + 1] + 1e-9 * n);
        }
    }
}

// ---------------------------------------------------------------------------
// Normalized checkers

TEST(B4, ExtremalFixtures) {
    auto r = check_B4(k(2, Sign::plus));
    expect_holds(r);
    sgtest::expect_values_near(spec(r, "alpha"), {0, 2}, 1e-12);
    EXPECT_NEAR(spec(r, "alpha").back(), 2.0, 1e-12);
    EXPECT_EQ(r.flags, (std::vector<std::string>{"max_attains_2", "bipartite_positive_component"}));

    r = check_B4(k(2, Sign::minus));
    expect_holds(r);
    EXPECT_NEAR(spec(r, "alpha").front(), -2.0, 1e-12);
    EXPECT_EQ(r.flags, (std::vector<std::string>{"min_attains_-2", "bipartite_negative_component"}));
}

TEST(B4, BoundsAndEqualityCharacterisation) {
    SplitMix64 rng(41);
    for (int t = 0; t < 1000; ++t) {
        const int n = rng.between(1, 10);
        const auto g = random_signed_graph(n, rng.uniform() * 0.6, rng.uniform(), rng.next());
        const auto r = check_B4(g);
        expect_holds(r);
        auto has = [&](const char* f) { return std::find(r.flags.begin(), r.flags.end(), f) != r.flags.end(); };
        EXPECT_EQ(has("max_attains_2"), has("bipartite_positive_component")) << r.graph;
        EXPECT_EQ(has("min_attains_-2"), has("bipartite_negative_component")) << r.graph;
    }
}

TEST(T4_1, GatesAndSkippedLinks) {
    const auto unb = c4(Sign::minus);
    const auto r = check_T4_1(unb, 0, 3);
    EXPECT_TRUE(r.hypothesis_met);
    expect_oracle_spectrum(spec(r, "alpha"), normalized_net_laplacian(unb));
    ASSERT_EQ(r.skipped.size(), 2u);
    EXPECT_EQ(r.skipped[0].position, 3);
    EXPECT_EQ(r.skipped[1].position, 4);

    expect_gated(check_T4_1(unb, 0, 1));               // positive edge
    expect_gated(check_T4_1(k(2, Sign::minus), 0, 1)); // deletion isolates both ends
    expect_gated(check_T4_1(build_graph(3, {{0, 1, Sign::minus}}), 0, 1));
}

TEST(T4_1, AllNegativeK3Counterexample) {
    const auto g = k(3, Sign::minus);
    const auto r = check_T4_1(g, 0, 1);
    EXPECT_TRUE(r.hypothesis_met);
    EXPECT_FALSE(r.holds);
    sgtest::expect_values_near(spec(r, "alpha"), {-1.5, -1.5, 0}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {-2, -1, 0}, 1e-12);
    EXPECT_NEAR(r.worst_slack, -0.5, 1e-12);
    EXPECT_EQ(r.witness_position, 1);
    EXPECT_EQ(r.witness_relation, "alpha_p <= beta_p");
}

TEST(T4_1, K3WithOneNegativeEdge) {
    const auto g = build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::minus}});
    const auto r = check_T4_1(g, 0, 2);
    EXPECT_TRUE(r.hypothesis_met);
    expect_oracle_spectrum(spec(r, "alpha"), normalized_net_laplacian(g));
    expect_oracle_spectrum(spec(r, "beta"), normalized_net_laplacian(path(3)));
}

TEST(T4_2, GatesAndSkippedLinks) {
    const auto r = check_T4_2(c4(), 0, 1);
    EXPECT_TRUE(r.hypothesis_met);
    expect_oracle_spectrum(spec(r, "beta"), normalized_net_laplacian(delete_edge(c4(), 0, 1).graph));
    ASSERT_EQ(r.skipped.size(), 2u);
    EXPECT_EQ(r.skipped[0].relation, "alpha_{p-1} <= beta_p");
    EXPECT_EQ(r.skipped[0].position, 1);
    EXPECT_EQ(r.skipped[1].position, 4);
    expect_holds(check_T4_2(k(3, Sign::plus), 0, 1));
    expect_gated(check_T4_2(c4(Sign::minus), 0, 3));
}

TEST(T4_2, Counterexample) {
    const auto g = build_graph(4, {{0, 3, Sign::minus}, {1, 2, Sign::plus}, {1, 3, Sign::minus}, {2, 3, Sign::minus}});
    const auto r = check_T4_2(g, 1, 2);
    EXPECT_TRUE(r.hypothesis_met);
    EXPECT_FALSE(r.holds);
    const auto a = charpoly_spectrum_oracle(normalized_net_laplacian(g)).values;
    const auto b = charpoly_spectrum_oracle(normalized_net_laplacian(delete_edge(g, 1, 2).graph)).values;
    sgtest::expect_values_near(spec(r, "alpha"), a, 1e-9);
    sgtest::expect_values_near(b, {-2, -1, -1, 0}, 1e-9);
    sgtest::expect_values_near(a, {-1.7287, -0.7713, 0, 0.5}, 1e-4);
    EXPECT_NEAR(r.worst_slack, b[2] - a[1], 1e-9); // beta_3 < alpha_2
    EXPECT_EQ(r.witness_position, 3);
}

TEST(T4_3, Examples) {
    // a=0, b=1, c=2, d=3 with a-c (+), b-d (+): contraction gives P3.
    const auto g = build_graph(4, {{0, 2, Sign::plus}, {1, 3, Sign::plus}});
    auto r = check_T4_3(g, 0, 1);
    EXPECT_TRUE(r.hypothesis_met);
    expect_oracle_spectrum(spec(r, "alpha"), normalized_net_laplacian(g));
    expect_oracle_spectrum(spec(r, "beta"), normalized_net_laplacian(path(3)));
    expect_holds(r);

    r = check_T4_3(path(4), 0, 3);
    EXPECT_TRUE(r.hypothesis_met);
    expect_oracle_spectrum(spec(r, "beta"), normalized_net_laplacian(k(3, Sign::plus)));
    expect_holds(r);

    expect_gated(check_T4_3(star(4), 1, 2));
}

TEST(T4_3, AdjacentPairCounterexample) {
    const auto g = build_graph(3, {{0, 2, Sign::plus}, {1, 2, Sign::minus}});
    const auto r = check_T4_3(g, 1, 2);
    EXPECT_TRUE(r.hypothesis_met);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.flags, std::vector<std::string>{"adjacent_pair"});
    sgtest::expect_values_near(spec(r, "alpha"), {-std::numbers::sqrt2, 0, std::numbers::sqrt2}, 1e-12);
    sgtest::expect_values_near(spec(r, "beta"), {0, 2}, 1e-12);
    EXPECT_NEAR(r.worst_slack, std::numbers::sqrt2 - 2.0, 1e-12);
    EXPECT_EQ(r.witness_position, 2);
}

TEST(T4_3, NonAdjacentPairsHold) {
    SplitMix64 rng(43);
    int checked = 0;
    for (int t = 0; t < 4000 && checked < 500; ++t) {
        const int n = rng.between(3, 9);
        const auto g = random_signed_graph(n, 0.4, 0.5, rng.next());
        const Vertex a = rng.between(0, n - 1);
        Vertex b = rng.between(0, n - 2);
        if (b >= a) ++b;
        if (g.adjacent(a, b)) continue;
        const auto r = check_T4_3(g, a, b);
        if (!r.hypothesis_met) continue;
        ++checked;
        expect_holds(r);
    }
    EXPECT_GT(checked, 100);
}

// ---------------------------------------------------------------------------
// Serialization

TEST(ReportIo, JsonRoundTrip) {
    std::vector<InterlacingReport> reports{
        check_T2_1(c4(), 1),
        check_C3_7(k(3, Sign::plus), 0),
        check_T4_2(c4(), 0, 1),
        check_C2_2(path(3), 0),
        check_B4(k(2, Sign::minus)),
        check_C2_5(7, 99),
    };
    for (const auto& r : reports) {
        const auto text = to_json(r).dump();
        const auto back = report_from_json(Json::parse(text));
        EXPECT_EQ(back, r) << text;
        EXPECT_EQ(to_json(back).dump(), text);
    }
}

TEST(ReportIo, JsonFields) {
    const auto j = to_json(check_T2_1(c4(), 1));
    for (const char* key : {"theorem", "graph", "surgery", "spectra", "holds", "hypothesis_met", "worst_slack",
                            "witness_position", "tol"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["theorem"], "T2.1");
    EXPECT_EQ(j["graph"], "n 4; 0 1 +; 0 3 +; 1 2 +; 2 3 +");
}

TEST(ReportIo, MalformedJson) {
    try {
        report_from_json(Json::parse(R"({"theorem":"T2.1"})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
}

TEST(ReportIo, Csv) {
    const auto csv = to_csv({check_T2_1(c4(), 1), check_C2_2(path(3), 0)});
    std::istringstream in(csv);
    std::string header, row1, row2, extra;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    EXPECT_FALSE(std::getline(in, extra));
    EXPECT_EQ(header, kCsvHeader);
    EXPECT_EQ(row1.rfind("T2.1,true,true,", 0), 0u) << row1;
    EXPECT_EQ(row2.rfind("C2.2,false,true,", 0), 0u) << row2;
    EXPECT_EQ(std::count(row1.begin(), row1.end(), ','), std::count(header.begin(), header.end(), ','));
}
