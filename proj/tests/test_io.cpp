#include "growthlab/group_expr.hpp"
#include "growthlab/io.hpp"
#include "growthlab/partitions.hpp"

#include <gtest/gtest.h>

using namespace growthlab;

namespace {

std::string data(const std::string& name) { return std::string(GROWTHLAB_TEST_DATA) + "/" + name; }
std::string sample(const std::string& name) { return std::string(GROWTHLAB_SAMPLES) + "/" + name; }

template <class Fn>
std::string error_of(Fn&& fn) {
    try {
        fn();
    } catch (const input_error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(GraphFormat, RoundTrip) {
    Graph g = half_graph(3);
    g.set_colors({0, 0, 1, 1, 2, 2});
    const Graph back = io::parse_graph(io::format_graph(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.colors(), g.colors());
}

TEST(GraphFormat, Errors) {
    EXPECT_NE(error_of([] { io::parse_graph("v=3\n0 3\n"); }).find("line 2"), std::string::npos);
    EXPECT_NE(error_of([] { io::parse_graph("v=3\n1 1\n"); }).find("self-loop"), std::string::npos);
    EXPECT_FALSE(error_of([] { io::parse_graph("vertices 3\n"); }).empty());
    EXPECT_FALSE(error_of([] { io::parse_graph("v=2\ncolor 0 1\n"); }).empty()); // partial coloring
    EXPECT_FALSE(error_of([] { io::parse_graph("v=2\ncolor 0 3\ncolor 1 0\n"); }).empty());
    EXPECT_FALSE(error_of([] { io::parse_graph("v=65\n"); }).empty());
    EXPECT_FALSE(error_of([] { io::parse_graph(""); }).empty());
}

TEST(ClassFormat, ModesAndSeparators) {
    auto spec = io::parse_class_spec("mode=forbidden\nv=2\n0 1\n---\nv=3\n");
    EXPECT_EQ(spec.mode, ClassSpec::Mode::forbidden);
    ASSERT_EQ(spec.graphs.size(), 2u);
    EXPECT_EQ(spec.graphs[0], Graph::complete(2));
    EXPECT_EQ(spec.graphs[1], Graph(3));
    EXPECT_EQ(io::parse_class_spec("v=1\n").mode, ClassSpec::Mode::generators);
    EXPECT_FALSE(error_of([] { io::parse_class_spec("mode=other\nv=1\n"); }).empty());
    EXPECT_FALSE(error_of([] { io::parse_class_spec("mode=forbidden\n"); }).empty());
}

TEST(ClassFormat, SampleFiles) {
    auto h8 = io::parse_class_spec(io::read_file(sample("graphs/half_graph_h8.class")));
    ASSERT_EQ(h8.graphs.size(), 1u);
    EXPECT_EQ(h8.graphs[0], half_graph(8));
    auto k2 = io::parse_class_spec(io::read_file(sample("graphs/forbid_k2.class")));
    EXPECT_EQ(k2.mode, ClassSpec::Mode::forbidden);
    EXPECT_EQ(io::parse_graph(io::read_file(sample("graphs/h4.graph"))), half_graph(4));
}

TEST(RelationFormat, RoundTripAndErrors) {
    FinRelation d(4, 3);
    d.insert({0, 1, 2});
    d.insert({3, 3, 3});
    const FinRelation back = io::parse_relation(io::format_relation(d));
    EXPECT_EQ(back.tuples(), d.tuples());
    EXPECT_NE(error_of([] { io::parse_relation("a=4 r=2\n0 1\n0 4\n"); }).find("line 3"), std::string::npos);
    EXPECT_NE(error_of([] { io::parse_relation("a=4 r=2\n0 1 2\n"); }).find("line 2"), std::string::npos);
    EXPECT_FALSE(error_of([] { io::parse_relation("r=2 a=4\n"); }).empty());
    EXPECT_FALSE(error_of([] { io::parse_relation(""); }).empty());
    EXPECT_FALSE(error_of([] { io::parse_relation("a=4 r=2\n0 x\n"); }).empty());
}

TEST(RelationFormat, SampleFiles) {
    EXPECT_EQ(io::parse_relation(io::read_file(sample("relations/lt10.rel"))).size(), 45u);
    EXPECT_EQ(io::parse_relation(io::read_file(sample("relations/empty.rel"))).size(), 0u);
    EXPECT_EQ(io::parse_relation(io::read_file(sample("relations/e1e2_m4.rel"))).size(), 64u * 64u * 4u);
}

TEST(BFile, ParseAndComments) {
    auto b = io::parse_bfile("# comment\n\n1 1\n2 1\n3 2\n");
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b.front().n, 1);
    EXPECT_EQ(b.back().value, 2);
}

TEST(BFile, MalformedLineNamesTheLine) {
    const std::string msg = error_of([] { io::parse_bfile("0 1\n1 1\n2 two\n"); });
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(error_of([] { io::parse_bfile("0 1\n1\n"); }).find("line 2"), std::string::npos);
    EXPECT_NE(error_of([] { io::parse_bfile("0 1\n2 1\n"); }).find("line 2"), std::string::npos);
    EXPECT_FALSE(error_of([] { io::parse_bfile("# nothing\n"); }).empty());
}

TEST(BFile, HugeValuesSurvive) {
    auto b = io::parse_bfile("0 123456789012345678901234567890\n");
    EXPECT_EQ(b[0].value.str(), "123456789012345678901234567890");
}

TEST(Compare, BellAgainstA000110) {
    auto b = io::parse_bfile(io::read_file(data("b000110.txt")));
    auto r = io::compare_with_bfile(IntSeq(bell_prefix(20)), b);
    EXPECT_TRUE(r.agree());
    EXPECT_EQ(r.lo, 0);
    EXPECT_EQ(r.hi, 20);
    EXPECT_EQ(r.compared, 21u);
}

TEST(Compare, SecondOrderBellAgainstA000258) {
    auto b = io::parse_bfile(io::read_file(data("b000258.txt")));
    auto r = io::compare_with_bfile(IntSeq(bell2_prefix(15)), b);
    EXPECT_TRUE(r.agree());
    EXPECT_EQ(r.hi, 15);
}

TEST(Compare, TrivialMeetPairsAgainstA059849) {
    auto b = io::parse_bfile(io::read_file(data("b059849.txt")));
    std::vector<BigInt> ours;
    for (std::size_t n = 0; n <= 8; ++n) ours.push_back(count_trivial_meet_pairs(n));
    auto r = io::compare_with_bfile(IntSeq(ours), b);
    EXPECT_TRUE(r.agree());
    EXPECT_EQ(r.compared, 9u);
}

TEST(Compare, OffsetAlignment) {
    // a b-file indexed from 1 holding B_1, B_2, ...
    auto b = io::parse_bfile("1 1\n2 2\n3 5\n4 15\n");
    const IntSeq bell(bell_prefix(6));
    EXPECT_TRUE(io::compare_with_bfile(bell, b).agree());
    auto shifted = io::compare_with_bfile(bell, b, 0);
    EXPECT_FALSE(shifted.agree());
    EXPECT_EQ(shifted.mismatches.front().n, 1);
}

TEST(Compare, ReportsMismatchesAndCaps) {
    auto b = io::parse_bfile("0 1\n1 1\n2 2\n3 6\n4 15\n");
    auto r = io::compare_with_bfile(IntSeq(bell_prefix(4)), b);
    ASSERT_EQ(r.mismatches.size(), 1u);
    EXPECT_EQ(r.mismatches[0].n, 3);
    EXPECT_EQ(r.mismatches[0].ours, 5);
    EXPECT_EQ(r.mismatches[0].theirs, 6);
    EXPECT_TRUE(io::compare_with_bfile(IntSeq(bell_prefix(4)), b, std::nullopt, 2).agree());
}

TEST(Compare, NoOverlapIsNotAgreement) {
    auto b = io::parse_bfile("10 1\n11 1\n");
    EXPECT_FALSE(io::compare_with_bfile(IntSeq(bell_prefix(5)), b).agree());
}

TEST(Expressions, SampleFilesParse) {
    const char* files[] = {"equivalence.expr", "pure_set.expr", "involution.expr", "two_sets.expr",
                           "finite_s5.expr", "single_point.expr", "nested_cells.expr"};
    for (const char* f : files) EXPECT_NO_THROW(parse_expr(io::read_file(sample(std::string("exprs/") + f)))) << f;
    EXPECT_THROW(io::read_file(sample("no/such/file")), input_error);
}
