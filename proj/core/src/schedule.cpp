#include "laurent/schedule.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace laurent {

std::size_t AdditionNetwork::additions() const noexcept {
    std::size_t total = nodes.size();
    for (const auto& f : forms) total += f.additions();
    return total;
}

namespace {

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j, int sign) {
    return (std::uint64_t{i} << 33) | (std::uint64_t{j} << 1) | (sign > 0 ? 1u : 0u);
}

}  // namespace

AdditionNetwork share_subexpressions(std::size_t inputs, std::vector<LinearForm> forms) {
    AdditionNetwork net;
    net.inputs = inputs;
    auto by_index = [](const SignedRef& a, const SignedRef& b) { return a.index < b.index; };
    for (auto& f : forms) std::sort(f.terms.begin(), f.terms.end(), by_index);

    auto next_var = static_cast<std::uint32_t>(inputs);
    std::unordered_map<std::uint64_t, std::size_t> counts;
    for (;;) {
        counts.clear();
        for (const auto& f : forms)
            for (std::size_t a = 0; a < f.terms.size(); ++a)
                for (std::size_t b = a + 1; b < f.terms.size(); ++b)
                    ++counts[pair_key(f.terms[a].index, f.terms[b].index, f.terms[a].sign * f.terms[b].sign)];

        std::uint64_t best_key = 0;
        std::size_t best = 0;
        for (const auto& [key, count] : counts)
            if (count > best || (count == best && key < best_key)) {
                best = count;
                best_key = key;
            }
        if (best < 2) break;

        const auto i = static_cast<std::uint32_t>(best_key >> 33);
        const auto j = static_cast<std::uint32_t>((best_key >> 1) & 0xFFFFFFFFu);
        const int sign = (best_key & 1u) ? 1 : -1;
        const auto t = next_var++;
        net.nodes.push_back({i, j, sign});

        for (auto& f : forms) {
            auto pi = std::find_if(f.terms.begin(), f.terms.end(), [&](auto& r) { return r.index == i; });
            auto pj = std::find_if(f.terms.begin(), f.terms.end(), [&](auto& r) { return r.index == j; });
            if (pi == f.terms.end() || pj == f.terms.end() || pi->sign * pj->sign != sign) continue;
            const int outer = pi->sign;
            std::erase_if(f.terms, [&](auto& r) { return r.index == i || r.index == j; });
            f.terms.push_back({t, outer});  // t is the largest index so far; order is kept
        }
    }
    net.forms = std::move(forms);
    return net;
}

LinearForm row_form(const IntMatrix& m, std::size_t row) {
    LinearForm f;
    const auto values = m.row(row);
    for (std::size_t c = 0; c < values.size(); ++c)
        if (values[c] != 0) f.terms.push_back({static_cast<std::uint32_t>(c), values[c] > 0 ? 1 : -1});
    return f;
}

namespace {

CombinerStage build_combiner(const IntMatrix& combiner) {
    CombinerStage stage;
    stage.outputRow.resize(combiner.rows());
    std::map<std::vector<int>, std::uint32_t> seen;
    for (std::size_t k = 0; k < combiner.rows(); ++k) {
        auto values = combiner.row(k);
        std::vector<int> row(values.begin(), values.end());
        const auto first = std::find_if(row.begin(), row.end(), [](int x) { return x != 0; });
        if (first == row.end()) continue;
        const int sign = *first > 0 ? 1 : -1;
        if (sign < 0)
            for (auto& x : row) x = -x;
        auto [it, inserted] = seen.emplace(row, static_cast<std::uint32_t>(stage.distinctRows.size()));
        if (inserted) {
            LinearForm f;
            for (std::size_t c = 0; c < row.size(); ++c)
                if (row[c] != 0) f.terms.push_back({static_cast<std::uint32_t>(c), row[c]});
            stage.distinctRows.push_back(std::move(f));
        }
        stage.outputRow[k] = SignedRef{it->second, sign};
    }
    return stage;
}

}  // namespace

ExecutionSchedule compile_schedule(const LaurentPlan& plan) {
    ExecutionSchedule s;
    s.order = plan.order();

    std::vector<LinearForm> forms;
    const auto& terms = plan.terms();
    for (std::size_t t = 0; t < terms.size(); ++t) {
        for (bool imag : {false, true}) {
            const auto& factor = imag ? terms[t].imagPart : terms[t].realPart;
            FactorStage stage;
            stage.term = t;
            stage.imaginaryOutput = imag;
            stage.scaled = terms[t].needs_multiplier();
            stage.firstProduct = forms.size();
            stage.rank = factor.rank;
            for (std::size_t r = 0; r < factor.rank; ++r) forms.push_back(row_form(factor.reducedRows, r));
            stage.combiner = build_combiner(factor.combiner);
            s.factors.push_back(std::move(stage));
        }
    }
    s.pre = share_subexpressions(plan.order(), std::move(forms));
    return s;
}

std::size_t ExecutionSchedule::multiplications() const noexcept {
    std::size_t total = 0;
    for (const auto& f : factors)
        if (f.scaled) total += f.rank;
    return total;
}

std::size_t ExecutionSchedule::combiner_additions() const noexcept {
    std::size_t total = 0;
    for (const auto& f : factors)
        for (const auto& row : f.combiner.distinctRows) total += row.additions();
    return total;
}

std::size_t ExecutionSchedule::accumulation_additions() const noexcept {
    std::size_t total = 0;
    for (bool imag : {false, true})
        for (std::size_t k = 0; k < order; ++k) {
            std::size_t contributions = 0;
            for (const auto& f : factors)
                if (f.imaginaryOutput == imag && f.combiner.outputRow[k]) ++contributions;
            if (contributions > 1) total += contributions - 1;
        }
    return total;
}

std::size_t unshared_additions(const LaurentPlan& plan) {
    const auto n = plan.order();
    std::size_t total = 0;
    std::vector<std::size_t> real_terms(n, 0), imag_terms(n, 0);
    for (const auto& term : plan.terms()) {
        if (!term.needs_multiplier()) {
            for (std::size_t k = 0; k < n; ++k) {
                real_terms[k] += term.realMatrix.row_nonzeros(k);
                imag_terms[k] += term.imagMatrix.row_nonzeros(k);
            }
            continue;
        }
        for (bool imag : {false, true}) {
            const auto& f = imag ? term.imagPart : term.realPart;
            for (std::size_t r = 0; r < f.rank; ++r) {
                const auto nz = f.reducedRows.row_nonzeros(r);
                if (nz > 1) total += nz - 1;
            }
            auto& acc = imag ? imag_terms : real_terms;
            for (std::size_t k = 0; k < n; ++k) acc[k] += f.combiner.row_nonzeros(k);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (real_terms[k] > 1) total += real_terms[k] - 1;
        if (imag_terms[k] > 1) total += imag_terms[k] - 1;
    }
    return total;
}

}  // namespace laurent
