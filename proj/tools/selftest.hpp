#ifndef PFREP_TOOLS_SELFTEST_HPP
#define PFREP_TOOLS_SELFTEST_HPP

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pfrep/pfrep.hpp"

namespace pfrep::cli {

struct SelftestOptions {
    std::optional<RingSpec> ring;  // empty: int, rat, mod:6, mod:2
    unsigned trials = 100;
    std::uint64_t seed = 0;
};

struct Section {
    explicit Section(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& replay) {
        ++cases;
        if (ok)
            ++passed;
        else
            failures.push_back(replay);
    }
};

/// Pf(build(generic)) against the generic form, one check per degree.
inline Section symbolic_identities() {
    Section s("symbolic identities");
    for (int d = min_degree; d <= max_degree; ++d) {
        const auto ring = generic_ring(d);
        const auto forms = form_ring(ring);
        const auto cv = generic_coefficients(ring, d);
        s.record(verify(forms, build(ring, cv), poly_from_coeffs(forms, cv)), "degree=" + std::to_string(d));
    }
    return s;
}

template <CommutativeRing R>
Section ring_trials(const R& ring, unsigned trials, Rng& rng) {
    Section s("ring trials " + ring.describe());
    const auto forms = form_ring(ring);
    for (int d = min_degree; d <= max_degree; ++d) {
        for (unsigned t = 0; t < trials; ++t) {
            const auto f = poly_from_coeffs(forms, random_coefficients(ring, d, rng));
            bool ok = false;
            try {
                ok = verify(forms, represent(forms, f, d), f);
            } catch (const Error&) {
                ok = false;
            }
            s.record(ok, "ring=" + ring.describe() + " degree=" + std::to_string(d) + " trial=" + std::to_string(t) +
                             " f=\"" + format(forms, f) + "\"");
        }
    }
    return s;
}

inline std::vector<Section> pfaffian_identities(unsigned trials, Rng& rng) {
    const IntegerRing zz;
    Section det("det = Pf^2 (int)");
    for (std::size_t n : {2, 4, 6, 8, 10})
        for (unsigned t = 0; t < trials; ++t) {
            const auto a = random_skew(zz, n, rng);
            const auto pf = pfaffian(a);
            det.record(determinant(a) == pf * pf, "size=" + std::to_string(n) + " trial=" + std::to_string(t));
        }
    Section cong("Pf(XAX^t) = det(X) Pf(A) (int)");
    for (std::size_t n : {4, 6})
        for (unsigned t = 0; t < trials; ++t) {
            const auto a = random_skew(zz, n, rng);
            const auto x = random_square(zz, n, rng);
            cong.record(pfaffian(congruence(x, a)) == determinant(x) * pfaffian(a),
                        "size=" + std::to_string(n) + " trial=" + std::to_string(t));
        }
    Section scale("Pf(cA) = c^d Pf(A) (int)");
    for (std::size_t n : {2, 4, 6, 8})
        for (unsigned t = 0; t < trials; ++t) {
            const auto a = random_skew(zz, n, rng);
            const Integer c = random_element(zz, rng);
            SkewMatrix<IntegerRing> ca(zz, n);
            for (const auto& e : a.nonzero_entries()) ca.set(e.i, e.j, c * e.value);
            scale.record(pfaffian(ca) == pow(zz, c, static_cast<unsigned>(n / 2)) * pfaffian(a),
                         "size=" + std::to_string(n) + " trial=" + std::to_string(t));
        }
    return {det, cong, scale};
}

/// Runs every suite and prints a summary table. Returns 0 iff all pass.
inline int run_selftest(const SelftestOptions& opt, std::ostream& out) {
    Rng rng(opt.seed);
    std::vector<Section> sections;
    sections.push_back(symbolic_identities());

    std::vector<RingSpec> rings;
    if (opt.ring)
        rings.push_back(*opt.ring);
    else
        rings = {parse_ring_spec("int"), parse_ring_spec("rat"), parse_ring_spec("mod:6"), parse_ring_spec("mod:2")};
    std::size_t trial_rings = 0;
    for (const auto& spec : rings) {
        if (spec.kind == RingSpec::Kind::symbolic) continue;
        ++trial_rings;
        sections.push_back(visit_ring(spec, [&](const auto& ring) -> Section {
            if constexpr (is_polynomial_ring_v<std::decay_t<decltype(ring)>>)
                return Section{};
            else
                return ring_trials(ring, opt.trials, rng);
        }));
    }
    for (auto& s : pfaffian_identities(opt.trials, rng)) sections.push_back(std::move(s));

    out << std::left << std::setw(36) << "suite" << std::right << std::setw(8) << "cases" << std::setw(8) << "passed"
        << "\n";
    std::size_t failures = 0;
    for (const auto& s : sections) {
        out << std::left << std::setw(36) << s.name << std::right << std::setw(8) << s.cases << std::setw(8)
            << s.passed << "\n";
        failures += s.failures.size();
    }
    for (const auto& s : sections)
        for (const auto& f : s.failures) out << "FAILED " << s.name << ": " << f << "\n";

    const auto& sym = sections.front();
    out << "selftest: " << sym.passed << "/" << sym.cases << " symbolic identities, " << opt.trials << "x"
        << trial_rings << " ring trials: " << (failures == 0 ? "all pass" : std::to_string(failures) + " failures")
        << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace pfrep::cli

#endif
