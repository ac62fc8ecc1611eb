#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace mfwb {

// Deformation retract datum (A, d_A) <-> (B, d_B) with maps iota: A -> B,
// proj: B -> A and homotopy h on B satisfying
//   proj iota = id_A,   iota proj = id_B + d_B h + h d_B.
// The chain vector type V needs +, -, unary -, and is_zero(); identities are
// verified exactly on the supplied spanning sets.
template <class V>
struct RetractOps {
    std::function<V(const V&)> dA, dB, iota, proj, h;
};

template <class V>
struct RetractDatum {
    RetractOps<V> ops;
    std::vector<V> basisA, basisB;
    // Optional Z/2 degree oracle for homogeneous vectors (nullopt on zero or
    // inhomogeneous input); when set, degree-correctness of the maps is
    // verified along with the retract identities.
    std::function<std::optional<int>(const V&)> parity;
};

template <class V>
void verify_retract(const RetractDatum<V>& r, const std::string& what = "retract datum")
{
    const auto& o = r.ops;
    auto expect_zero = [&](const V& v, const char* which) {
        if (!v.is_zero())
            fail(Errc::validation, what + ": identity '" + which + "' fails");
    };
    auto expect_degree = [&](const V& in, const V& out, int shift, const char* which) {
        if (!r.parity)
            return;
        auto pin = r.parity(in);
        auto pout = r.parity(out);
        if (pin && pout && *pout != (*pin + shift) % 2)
            fail(Errc::validation, what + ": map '" + which + "' is not degree-correct");
    };
    for (const V& a : r.basisA) {
        expect_zero(o.dA(o.dA(a)), "dA^2 = 0");
        expect_zero(o.proj(o.iota(a)) - a, "proj iota = id_A");
        expect_zero(o.dB(o.iota(a)) - o.iota(o.dA(a)), "iota is a chain map");
        expect_degree(a, o.iota(a), 0, "iota");
        expect_degree(a, o.dA(a), 1, "dA");
    }
    for (const V& b : r.basisB) {
        expect_zero(o.dB(o.dB(b)), "dB^2 = 0");
        expect_zero(o.iota(o.proj(b)) - b - o.dB(o.h(b)) - o.h(o.dB(b)),
                    "iota proj = id_B + dh + hd");
        expect_zero(o.dA(o.proj(b)) - o.proj(o.dB(b)), "proj is a chain map");
        expect_degree(b, o.proj(b), 0, "proj");
        expect_degree(b, o.h(b), 1, "h");
        expect_degree(b, o.dB(b), 1, "dB");
    }
}

template <class V>
RetractDatum<V> make_retract_datum(RetractOps<V> ops, std::vector<V> basisA,
                                   std::vector<V> basisB,
                                   const std::string& what = "retract datum",
                                   std::function<std::optional<int>(const V&)> parity = {})
{
    RetractDatum<V> r{std::move(ops), std::move(basisA), std::move(basisB),
                      std::move(parity)};
    verify_retract(r, what);
    return r;
}

// Basic perturbation lemma. Requires (d_B + delta)^2 = 0 (checked on basisB)
// and operational nilpotency of delta h within `cap` applications per
// vector. Produces the perturbed datum
//   iota' = iota + h psi iota,  proj' = proj + proj psi h,
//   h' = h + h psi h,           d_A' = d_A + proj psi iota,
//   d_B' = d_B + delta,         psi = sum_{j>=0} (delta h)^j delta,
// and verifies every retract identity exactly post hoc.
template <class V, class Fn>
RetractDatum<V> bpl_perturb(const RetractDatum<V>& r, Fn delta_fn, int cap = 64)
{
    std::function<V(const V&)> delta = std::move(delta_fn);
    const auto& o = r.ops;
    for (const V& b : r.basisB) {
        V v = r.ops.dB(r.ops.dB(b)) + r.ops.dB(delta(b)) + delta(r.ops.dB(b)) +
              delta(delta(b));
        if (!v.is_zero())
            fail(Errc::validation, "perturbed differential does not square to zero");
    }

    auto h = o.h;
    auto psi = [delta, h, cap](const V& v) -> V {
        V term = delta(v);
        V acc = term;
        for (int j = 1; j <= cap; ++j) {
            term = delta(h(term));
            if (term.is_zero())
                return acc;
            acc = acc + term;
        }
        fail(Errc::compute,
             "perturbation is not nilpotent within cap " + std::to_string(cap));
    };

    RetractOps<V> p;
    p.dB = [dB = o.dB, delta](const V& v) { return dB(v) + delta(v); };
    p.dA = [dA = o.dA, proj = o.proj, psi, iota = o.iota](const V& v) {
        return dA(v) + proj(psi(iota(v)));
    };
    p.iota = [iota = o.iota, h, psi](const V& v) {
        V iv = iota(v);
        return iv + h(psi(iv));
    };
    p.proj = [proj = o.proj, psi, h](const V& v) { return proj(v) + proj(psi(h(v))); };
    p.h = [h, psi](const V& v) { return h(v) + h(psi(h(v))); };

    RetractDatum<V> out{std::move(p), r.basisA, r.basisB, r.parity};
    verify_retract(out, "perturbed retract datum");
    return out;
}

} // namespace mfwb
