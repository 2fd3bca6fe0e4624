#include <gtest/gtest.h>

#include <random>

#include "laurent/schedule.hpp"

namespace laurent {
namespace {

// Evaluates a network on integer inputs, independent of the engine.
std::vector<long> evaluate(const AdditionNetwork& net, const std::vector<long>& inputs) {
    std::vector<long> vars(inputs);
    for (const auto& node : net.nodes) vars.push_back(vars[node.lhs] + node.sign * vars[node.rhs]);
    std::vector<long> out;
    for (const auto& form : net.forms) {
        long acc = 0;
        for (const auto& t : form.terms) acc += t.sign * vars[t.index];
        out.push_back(acc);
    }
    return out;
}

std::vector<long> evaluate_plain(const std::vector<LinearForm>& forms, const std::vector<long>& inputs) {
    std::vector<long> out;
    for (const auto& form : forms) {
        long acc = 0;
        for (const auto& t : form.terms) acc += t.sign * inputs[t.index];
        out.push_back(acc);
    }
    return out;
}

TEST(ShareSubexpressions, SharedPairIsComputedOnce) {
    // a+b+c, a+b-c, a+b: the pair (a+b) appears three times.
    std::vector<LinearForm> forms = {
        {{{0, 1}, {1, 1}, {2, 1}}}, {{{0, 1}, {1, 1}, {2, -1}}}, {{{0, 1}, {1, 1}}}};
    const auto net = share_subexpressions(3, forms);
    ASSERT_EQ(net.nodes.size(), 1u);
    EXPECT_EQ(net.additions(), 3u);  // a+b once, then ±c twice
    EXPECT_EQ(evaluate(net, {3, 5, 7}), evaluate_plain(forms, {3, 5, 7}));
}

TEST(ShareSubexpressions, SignedPairsMatchUpToSign) {
    // (a-b) and -(a-b) + c share the signed pair a-b.
    std::vector<LinearForm> forms = {{{{0, 1}, {1, -1}}}, {{{0, -1}, {1, 1}, {2, 1}}}};
    const auto net = share_subexpressions(3, forms);
    EXPECT_EQ(net.nodes.size(), 1u);
    EXPECT_EQ(evaluate(net, {10, 4, 1}), evaluate_plain(forms, {10, 4, 1}));
}

TEST(ShareSubexpressions, NoRepeatsMeansNoNodes) {
    std::vector<LinearForm> forms = {{{{0, 1}, {1, 1}}}, {{{2, 1}, {3, -1}}}};
    const auto net = share_subexpressions(4, forms);
    EXPECT_TRUE(net.nodes.empty());
    EXPECT_EQ(net.additions(), 2u);
}

TEST(ShareSubexpressions, RandomFormsEvaluateIdentically) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coeff(-1, 1);
    std::uniform_int_distribution<long> value(-1000, 1000);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t inputs = 12;
        std::vector<LinearForm> forms(20);
        std::size_t naive = 0;
        for (auto& f : forms) {
            for (std::uint32_t i = 0; i < inputs; ++i)
                if (int c = coeff(rng)) f.terms.push_back({i, c});
            naive += f.additions();
        }
        const auto net = share_subexpressions(inputs, forms);
        EXPECT_LE(net.additions(), naive);
        std::vector<long> x(inputs);
        for (auto& v : x) v = value(rng);
        ASSERT_EQ(evaluate(net, x), evaluate_plain(forms, x));
    }
}

TEST(CompileSchedule, SixteenPointCounts) {
    const auto s = compile_schedule(build_plan(16));
    EXPECT_EQ(s.multiplications(), 12u);
    EXPECT_EQ(s.factors.size(), 8u);
    const auto total = s.pre_additions() + s.combiner_additions() + s.accumulation_additions();
    EXPECT_GE(total, 85u);
    EXPECT_LE(total, 115u);
}

TEST(CompileSchedule, FourPointIsMultiplierFree) {
    const auto s = compile_schedule(build_plan(4));
    EXPECT_EQ(s.multiplications(), 0u);
}

TEST(UnsharedAdditions, ExceedsSharedCount) {
    for (std::size_t n : {8u, 16u, 24u}) {
        const auto plan = build_plan(n);
        const auto s = compile_schedule(plan);
        EXPECT_GE(unshared_additions(plan), s.pre_additions() + s.combiner_additions() + s.accumulation_additions());
    }
    EXPECT_EQ(unshared_additions(build_plan(16)), 198u);
}

}  // namespace
}  // namespace laurent
