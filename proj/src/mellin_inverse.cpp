#include "holomellin/mellin_inverse.hpp"

#include <sstream>

#include "holomellin/errors.hpp"
#include "holomellin/mellin_forward.hpp"

namespace holomellin {

int MixedRelation::max_rec_degree() const {
    int k = -1;
    for (const auto& [shift, p] : rec_part) k = std::max(k, p.degree());
    return k;
}

std::string MixedRelation::str() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& body) {
        if (!first) out << " + ";
        out << body;
        first = false;
    };
    for (auto it = diff_part.rbegin(); it != diff_part.rend(); ++it) {
        std::string f = it->first == 0 ? "f(x)" : "f^(" + std::to_string(it->first) + ")(x)";
        emit("(" + it->second.str() + ")*" + f);
    }
    for (auto it = rec_part.rbegin(); it != rec_part.rend(); ++it) {
        std::string m = it->first == 0 ? "M(n)"
                        : it->first > 0 ? "M(n+" + std::to_string(it->first) + ")"
                                        : "M(n" + std::to_string(it->first) + ")";
        emit("(" + it->second.str() + ")*" + m);
    }
    for (const auto& [sym, c] : inhom.terms()) emit("(" + c.str() + ")*" + sym.str());
    if (first) out << "0";
    out << " = 0";
    return out.str();
}

MixedRelation relation_from_rec(const RecOp& rec) {
    MixedRelation rel;
    for (int i = 0; i <= rec.order(); ++i)
        if (!rec.coeff(i).is_zero()) rel.rec_part.emplace(i, rec.coeff(i));
    rel.inhom = rec.inhom();
    return rel;
}

MixedRelation reduction_pass(const MixedRelation& rel) {
    const int k = rel.max_rec_degree();
    if (k < 0) throw DomainError("reduction pass on an empty recurrence part");

    MixedRelation out = rel;
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [shift, p] : rel.rec_part) {
        const Rational c = p.coeff(k);
        if (c == 0) continue;
        if (shift < 0)
            throw DomainError("reduction requires shift-normalized input (nonnegative shifts)");

        // Trade c*n^k*M(n+i) for the differential term and subtract the full
        // Mellin image of (-1)^k x^{k+i} f^(k), which restores the relation.
        Polynomial mono = Polynomial::monomial(Var::X, c * sign, k + shift);
        auto [dit, dnew] = out.diff_part.try_emplace(k, mono);
        if (!dnew) dit->second += mono;
        if (dit->second.is_zero()) out.diff_part.erase(dit);

        MellinTermImage img = mellin_of_term(k + shift, k);
        for (const auto& [s, poly] : img.shifts) {
            Polynomial delta = poly * (c * sign);
            auto it = out.rec_part.find(s);
            if (it == out.rec_part.end())
                it = out.rec_part.emplace(s, Polynomial(Var::N)).first;
            it->second -= delta;
            if (it->second.is_zero()) out.rec_part.erase(it);
        }
        for (const auto& [sym, poly] : img.inhom.terms())
            out.inhom.add(sym, poly * (-c * sign));
    }

    if (out.max_rec_degree() >= k)
        throw InvariantViolation("degree reduction failed: n^" + std::to_string(k) +
                                 " terms survived the pass");
    return out;
}

DiffOp eliminate_boundary(const MixedRelation& rel) {
    if (!rel.rec_part.empty())
        throw DomainError("boundary elimination requires an empty recurrence part");
    if (rel.diff_part.empty())
        throw DomainError("degenerate relation: no differential part to return");

    std::map<int, Polynomial> diff = rel.diff_part;
    if (!rel.inhom.empty()) {
        // d/dx of sum_j q_j f^(j): the boundary constants drop out.
        std::map<int, Polynomial> derived;
        auto accumulate = [&derived](int j, const Polynomial& p) {
            if (p.is_zero()) return;
            auto [it, fresh] = derived.try_emplace(j, p);
            if (!fresh) it->second += p;
        };
        for (const auto& [j, q] : diff) {
            accumulate(j, q.derivative());
            accumulate(j + 1, q);
        }
        diff = std::move(derived);
    }

    int max_order = diff.rbegin()->first;
    std::vector<Polynomial> coeffs(static_cast<size_t>(max_order) + 1, Polynomial(Var::X));
    for (const auto& [j, q] : diff) coeffs[static_cast<size_t>(j)] = q;
    return normalize_diffop(DiffOp(std::move(coeffs)));
}

DiffOp rec_to_ode(const RecOp& rec, InverseTrace* trace) {
    if (!rec.homogeneous())
        throw UnsupportedInput(
            "inverse conversion accepts homogeneous recurrences only; eliminate the "
            "inhomogeneous part first");
    RecOp normalized = normalize_recop(rec);
    MixedRelation rel = relation_from_rec(normalized);

    const int max_passes = rel.max_rec_degree() + 1;
    int passes = 0;
    while (!rel.rec_part.empty()) {
        if (passes >= max_passes)
            throw InvariantViolation("reduction exceeded its termination bound");
        rel = reduction_pass(rel);
        ++passes;
        if (trace) trace->passes.push_back(rel);
    }
    if (trace) trace->differentiated = !rel.inhom.empty();
    return eliminate_boundary(rel);
}

}  // namespace holomellin
