#include "test_support.hpp"

#include <sgspec/error.hpp>
#include <sgspec/generators.hpp>
#include <sgspec/sg_format.hpp>
#include <sgspec/signed_graph.hpp>

using namespace sgspec;
using sgtest::cycle_parity_balanced;

namespace {

SignedGraph k2_negative() { return build_graph(2, {{0, 1, Sign::minus}}); }
SignedGraph triangle_positive() {
    return build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::plus}});
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::ParseError;
}

} // namespace

TEST(BuildGraph, SmallestSignedGraph) {
    const auto g = k2_negative();
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.sign_of(1, 0), Sign::minus);
}

TEST(BuildGraph, TriangleAndCanonicalOrder) {
    const auto g = build_graph(3, {{2, 0, Sign::plus}, {1, 2, Sign::plus}, {1, 0, Sign::plus}});
    EXPECT_EQ(g, triangle_positive());
    EXPECT_EQ(g.edges().front().u, 0);
    EXPECT_EQ(g.edges().front().v, 1);
}

TEST(BuildGraph, Rejections) {
    EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1, Sign::plus}, {0, 1, Sign::minus}}); }), ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1, Sign::plus}, {1, 0, Sign::plus}}); }), ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([] { build_graph(3, {{1, 1, Sign::plus}}); }), ErrorKind::SelfLoop);
    EXPECT_EQ(kind_of([] { build_graph(3, {{0, 3, Sign::plus}}); }), ErrorKind::VertexOutOfRange);
    EXPECT_EQ(kind_of([] { build_graph(3, {{-1, 2, Sign::plus}}); }), ErrorKind::VertexOutOfRange);
}

TEST(DegreeProfile, Examples) {
    const auto p = degree_profile(k2_negative());
    EXPECT_EQ(p.d[0], 1);
    EXPECT_EQ(p.d_minus[0], 1);
    EXPECT_EQ(p.sdeg(0), -1);

    const auto t = degree_profile(triangle_positive());
    for (int v = 0; v < 3; ++v) {
        EXPECT_EQ(t.d[v], 2);
        EXPECT_EQ(t.d_minus[v], 0);
        EXPECT_EQ(t.sdeg(v), 2);
    }
    const auto e = degree_profile(generate(Family::empty, 3, signature::AllPlus{}));
    for (int v = 0; v < 3; ++v) EXPECT_EQ(e.d[v] + e.d_plus[v] + e.d_minus[v], 0);
}

TEST(NegDegreeRange, Examples) {
    auto r = min_max_neg_degree(triangle_positive());
    EXPECT_EQ(r.min, 0);
    EXPECT_EQ(r.max, 0);
    r = min_max_neg_degree(k2_negative());
    EXPECT_EQ(r.min, 1);
    EXPECT_EQ(r.max, 1);
    r = min_max_neg_degree(build_graph(3, {{0, 1, Sign::minus}, {1, 2, Sign::plus}}));
    EXPECT_EQ(r.min, 0);
    EXPECT_EQ(r.max, 1);
    EXPECT_EQ(kind_of([] { min_max_neg_degree(SignedGraph(0, {})); }), ErrorKind::EmptyGraph);
}

TEST(CoRegularity, Examples) {
    const auto t = co_regularity(triangle_positive());
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, (CoRegularity{2, 2, true}));
    const auto c4 = co_regularity(generate(Family::cycle, 4, signature::AllMinus{}));
    ASSERT_TRUE(c4);
    EXPECT_EQ(*c4, (CoRegularity{2, -2, false}));
    EXPECT_FALSE(co_regularity(generate(Family::path, 3, signature::AllPlus{})));
    // Same degree, different net degree.
    EXPECT_FALSE(co_regularity(generate(Family::cycle, 4, signature::Explicit{{Sign::minus, Sign::plus, Sign::plus, Sign::plus}})));
}

TEST(Switching, Examples) {
    const auto g = k2_negative();
    EXPECT_EQ(apply_switching(g, SwitchingFunction::identity(2)), g);
    EXPECT_EQ(apply_switching(g, {{Sign::plus, Sign::minus}}), build_graph(2, {{0, 1, Sign::plus}}));
    EXPECT_EQ(kind_of([&] { apply_switching(g, {{Sign::plus}}); }), ErrorKind::LengthMismatch);
}

TEST(Switching, InvolutionOnRandomGraphs) {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.between(1, 10);
        const auto g = random_signed_graph(n, 0.5, 0.5, rng.next());
        const auto a = sgtest::random_switching(rng, n);
        const auto once = apply_switching(g, a);
        EXPECT_TRUE(same_underlying_graph(g, once));
        EXPECT_EQ(apply_switching(once, a), g);
        EXPECT_TRUE(switching_equivalent(g, once));
        EXPECT_EQ(is_balanced(g), is_balanced(once));
    }
}

TEST(Balance, Examples) {
    EXPECT_TRUE(is_balanced(triangle_positive()));
    EXPECT_FALSE(is_balanced(build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::minus}})));
    EXPECT_TRUE(is_balanced(SignedGraph(0, {})));
}

TEST(Balance, TreesAlwaysBalanced) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        // Random recursive tree: vertex i attaches to a uniform earlier vertex.
        const int n = rng.between(1, 14);
        std::vector<Edge> edges;
        for (int i = 1; i < n; ++i)
            edges.push_back({i, rng.between(0, i - 1), rng.bernoulli(0.5) ? Sign::minus : Sign::plus});
        const SignedGraph t(n, edges);
        const auto s = balancing_switch(t);
        ASSERT_TRUE(s);
        EXPECT_EQ(apply_switching(t, *s), with_uniform_sign(t, Sign::plus));
    }
}

TEST(Balance, CycleParityOracleExhaustive) {
    for (int n = 3; n <= 8; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            const auto signs = sgtest::signs_from_mask(mask, n);
            const auto c = generate(Family::cycle, n, signature::Explicit{signs});
            EXPECT_EQ(is_balanced(c), cycle_parity_balanced(signs)) << "n=" << n << " mask=" << mask;
        }
    }
}

TEST(Balance, TwoCyclesSharingAVertex) {
    // Bowtie: triangles 0-1-2 and 0-3-4. Balanced iff both triangles are.
    for (unsigned mask = 0; mask < 64; ++mask) {
        const auto s = sgtest::signs_from_mask(mask, 6);
        const SignedGraph g(5, std::vector<Edge>{{0, 1, s[0]}, {1, 2, s[1]}, {0, 2, s[2]}, {0, 3, s[3]}, {3, 4, s[4]}, {0, 4, s[5]}});
        const bool want = cycle_parity_balanced({s[0], s[1], s[2]}) && cycle_parity_balanced({s[3], s[4], s[5]});
        EXPECT_EQ(is_balanced(g), want);
    }
}

TEST(SwitchingEquivalent, Examples) {
    const auto plus4 = generate(Family::cycle, 4, signature::AllPlus{});
    const auto one_neg = generate(Family::cycle, 4, signature::Explicit{{Sign::minus, Sign::plus, Sign::plus, Sign::plus}});
    const auto other_neg = generate(Family::cycle, 4, signature::Explicit{{Sign::plus, Sign::plus, Sign::minus, Sign::plus}});
    EXPECT_TRUE(switching_equivalent(plus4, plus4));
    EXPECT_FALSE(switching_equivalent(plus4, one_neg));
    EXPECT_TRUE(switching_equivalent(one_neg, other_neg));
    EXPECT_EQ(kind_of([&] { switching_equivalent(plus4, generate(Family::path, 4, signature::AllPlus{})); }),
              ErrorKind::UnderlyingGraphMismatch);
}

TEST(SwitchingEquivalent, CycleParityOracle) {
    for (int n = 3; n <= 12; ++n) {
        SplitMix64 rng(static_cast<std::uint64_t>(n));
        for (int trial = 0; trial < 64; ++trial) {
            std::vector<Sign> a(static_cast<std::size_t>(n)), b(a.size());
            for (auto& s : a) s = rng.bernoulli(0.5) ? Sign::minus : Sign::plus;
            for (auto& s : b) s = rng.bernoulli(0.5) ? Sign::minus : Sign::plus;
            const auto ga = generate(Family::cycle, n, signature::Explicit{a});
            const auto gb = generate(Family::cycle, n, signature::Explicit{b});
            EXPECT_EQ(switching_equivalent(ga, gb), cycle_parity_balanced(a) == cycle_parity_balanced(b));
        }
    }
}

TEST(Generate, Examples) {
    const auto c3 = generate(Family::cycle, 3, signature::AllPlus{});
    EXPECT_EQ(c3, triangle_positive());
    EXPECT_TRUE(is_balanced(c3));
    const auto p4 = generate(Family::path, 4, signature::AllMinus{});
    EXPECT_EQ(p4.size(), 3u);
    EXPECT_TRUE(is_balanced(p4));
    const auto star = generate(Family::star, 4, signature::Explicit{{Sign::plus, Sign::minus, Sign::plus}});
    EXPECT_EQ(star.degree(0), 3);
    EXPECT_EQ(star.sign_of(0, 2), Sign::minus);
    EXPECT_EQ(degree_profile(star).d_minus[0], 1);
}

TEST(Generate, Errors) {
    EXPECT_EQ(kind_of([] { generate(Family::cycle, 2, signature::AllPlus{}); }), ErrorKind::BadOrder);
    EXPECT_EQ(kind_of([] { generate(Family::star, 1, signature::AllPlus{}); }), ErrorKind::BadOrder);
    EXPECT_EQ(kind_of([] { generate(Family::path, 3, signature::Explicit{{Sign::plus}}); }), ErrorKind::LengthMismatch);
    EXPECT_EQ(kind_of([] { random_signed_graph(4, 1.5, 0.5, 1); }), ErrorKind::BadProbability);
}

TEST(RandomGraph, Examples) {
    EXPECT_EQ(random_signed_graph(7, 0.0, 0.5, 3).size(), 0u);
    const auto k = random_signed_graph(6, 1.0, 0.0, 3);
    EXPECT_EQ(k, generate(Family::complete, 6, signature::AllPlus{}));
    EXPECT_EQ(random_signed_graph(9, 0.5, 0.5, 42), random_signed_graph(9, 0.5, 0.5, 42));
    EXPECT_EQ(random_signed_graph(6, 1.0, 1.0, 3), generate(Family::complete, 6, signature::AllMinus{}));
}

TEST(Rng, ReferenceValues) {
    // SplitMix64 with seed 0 has published first outputs.
    SplitMix64 r(0);
    EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
}

TEST(Rng, BelowAndBetweenStayInRange) {
    SplitMix64 r(5);
    for (int i = 0; i < 10000; ++i) {
        EXPECT_LT(r.below(7), 7u);
        const int x = r.between(-3, 3);
        EXPECT_GE(x, -3);
        EXPECT_LE(x, 3);
        const double u = r.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Connectivity, ComponentsAndIsolated) {
    const auto g = build_graph(5, {{0, 1, Sign::plus}, {3, 4, Sign::minus}});
    EXPECT_EQ(component_count(g), 3);
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(has_isolated_vertex(g));
    EXPECT_TRUE(is_connected(triangle_positive()));
    EXPECT_FALSE(has_isolated_vertex(triangle_positive()));
}

TEST(SgFormat, ParseVariants) {
    const auto g = parse_sg("# comment\nn 3\n0 1 +\n1 2 -1 # trailing\n\n");
    EXPECT_EQ(g, build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::minus}}));
    EXPECT_EQ(parse_sg("n 3; 0 1 +; 1 2 -"), g);
    EXPECT_EQ(parse_sg("n 2\n0 1 +1\n"), build_graph(2, {{0, 1, Sign::plus}}));
    EXPECT_EQ(parse_sg("n 2\n0 1 1\n"), build_graph(2, {{0, 1, Sign::plus}}));
}

TEST(SgFormat, RoundTrip) {
    SplitMix64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const auto g = random_signed_graph(rng.between(0, 12), 0.4, 0.5, rng.next());
        EXPECT_EQ(parse_sg(to_sg(g)), g);
        EXPECT_EQ(parse_sg(to_edge_list_string(g)), g);
    }
    EXPECT_EQ(to_edge_list_string(build_graph(3, {{0, 1, Sign::plus}, {1, 2, Sign::minus}})), "n 3; 0 1 +; 1 2 -");
}

TEST(SgFormat, Errors) {
    try {
        parse_sg("n 3\n0 1 +\n1 2 x\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
        const std::string msg = e.what();
        EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
        EXPECT_NE(msg.find("'x'"), std::string::npos) << msg;
    }
    EXPECT_EQ(kind_of([] { parse_sg("0 1 +\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_sg(""); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_sg("n 2\n0 1\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_sg("n 2\n0 5 +\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_sg("n 2\n0 1 +\n1 0 -\n"); }), ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([] { parse_sg("n 2\n1 1 +\n"); }), ErrorKind::SelfLoop);
}
