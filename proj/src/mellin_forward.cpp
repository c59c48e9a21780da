#include "holomellin/mellin_forward.hpp"

#include "holomellin/errors.hpp"

namespace holomellin {

MellinTermImage mellin_of_term(long m, long p) {
    if (m < 0 || p < 0) throw DomainError("mellin_of_term requires m, p >= 0");
    MellinTermImage img;
    const Rational sp = (p % 2 == 0) ? 1 : -1;
    img.shifts.emplace(static_cast<int>(m - p), falling_factorial(m, p) * sp);
    for (long i = 0; i < p; ++i) {
        const Rational si = (i % 2 == 0) ? 1 : -1;
        img.inhom.add(BoundarySymbol::deriv_at_one(static_cast<int>(p - 1 - i)),
                      falling_factorial(m, i) * si);
    }
    return img;
}

RecOp ode_to_mellin_rec(const DiffOp& ode) {
    std::map<int, Polynomial> shifts;
    InhomPart inhom;
    for (int p = 0; p <= ode.order(); ++p) {
        const Polynomial& q = ode.coeff(p);
        for (int m = 0; m <= q.degree(); ++m) {
            const Rational& c = q.coeff(m);
            if (c == 0) continue;
            MellinTermImage img = mellin_of_term(m, p);
            for (const auto& [shift, poly] : img.shifts) {
                auto [it, inserted] = shifts.try_emplace(shift, poly * c);
                if (!inserted) it->second += poly * c;
            }
            for (const auto& [sym, poly] : img.inhom.terms()) inhom.add(sym, poly * c);
        }
    }
    return normalize_recop(RecOp::from_shift_map(shifts, std::move(inhom)));
}

}  // namespace holomellin
