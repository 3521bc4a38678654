#include "twistlab/aptables.hpp"

#include <array>
#include <string>

#include "twistlab/errors.hpp"
#include "twistlab/family.hpp"
#include "twistlab/parallel.hpp"

namespace twistlab::aptables {

namespace {

const IntPoly& model(AuxCurve c) {
    static const IntPoly e0 = family::curve_poly(family::CurveSpec::e0());
    static const IntPoly e1 = family::curve_poly(family::CurveSpec::e1());
    static const IntPoly e2 = family::curve_poly(family::CurveSpec::e2());
    static const IntPoly c1 = family::curve_poly(family::CurveSpec::c1());
    switch (c) {
        case AuxCurve::E0: return e0;
        case AuxCurve::E1: return e1;
        case AuxCurve::E2: return e2;
        case AuxCurve::C1: return c1;
    }
    throw InternalError("unknown curve");
}

// chi-sum of the model over x in [x0, x1) via finite differences: the
// degree-k polynomial costs k additions per step, and squareness is one
// bitmap probe.
i64 diff_char_sum(const IntPoly& f, i64 p, i64 x0, i64 x1,
                  const std::vector<uint8_t>& sq) {
    u64 up = static_cast<u64>(p);
    auto fbar = reduce_mod(f, p);
    int k = static_cast<int>(fbar.size()) - 1;
    // difference table from values at x0..x0+k
    std::vector<u64> state(static_cast<size_t>(k + 1));
    {
        std::vector<u64> vals(static_cast<size_t>(k + 1));
        for (int i = 0; i <= k; ++i)
            vals[static_cast<size_t>(i)] =
                ffcount::fp_eval(fbar, static_cast<u64>((x0 + i) % p), p);
        for (int lev = 0; lev <= k; ++lev) {
            state[static_cast<size_t>(lev)] = vals[0];
            for (size_t i = 0; i + 1 < vals.size(); ++i)
                vals[i] = (vals[i + 1] + up - vals[i]) % up;
            vals.pop_back();
        }
    }
    i64 n_sq = 0, n_zero = 0, total = 0;
    for (i64 x = x0; x < x1; ++x) {
        u64 v = state[0];
        n_sq += sq[v];
        n_zero += (v == 0);
        ++total;
        for (int lev = 0; lev < k; ++lev) {
            u64 s = state[static_cast<size_t>(lev)] + state[static_cast<size_t>(lev + 1)];
            if (s >= up) s -= up;
            state[static_cast<size_t>(lev)] = s;
        }
    }
    return 2 * n_sq + n_zero - total;
}

std::vector<uint8_t> square_bitmap(i64 p) {
    std::vector<uint8_t> sq(static_cast<size_t>(p), 0);
    u64 v = 0;
    for (i64 x = 1; x <= (p - 1) / 2; ++x) {
        v += static_cast<u64>(2 * x - 1);
        while (v >= static_cast<u64>(p)) v -= static_cast<u64>(p);
        sq[v] = 1;
    }
    return sq;
}

i64 ap_fast(AuxCurve c, i64 p, const std::vector<uint8_t>& sq) {
    if (c == AuxCurve::E0) {
        if (p % 3 == 2) return 0;  // supersingular: inert in Q(sqrt(-3))
        return -diff_char_sum(model(c), p, 0, p, sq);
    }
    if (p % 4 == 3) return 0;  // odd model, chi(-1) = -1
    // odd model at p = 1 mod 4: chi(f(-x)) = chi(f(x)), f(0) = 0
    return -2 * diff_char_sum(model(c), p, 1, (p - 1) / 2 + 1, sq);
}

}  // namespace

const char* curve_name(AuxCurve c) {
    switch (c) {
        case AuxCurve::E0: return "e0";
        case AuxCurve::E1: return "e1";
        case AuxCurve::E2: return "e2";
        case AuxCurve::C1: return "c1";
    }
    throw InternalError("unknown curve");
}

i64 ap_single(AuxCurve c, i64 p) {
    // a_p = -sum_x chi(f(x)) for all four models (elliptic trace, and
    // -a_{p,1} for the degree-5 genus-2 model).
    return -ffcount::char_sum(model(c), p);
}

std::vector<std::pair<i64, i64>> ap_range(AuxCurve c, i64 pmax, int workers,
                                          const cache::CacheDir& cache) {
    std::vector<i64> ps = primes_in(5, pmax);
    std::string table = std::string("ap_") + curve_name(c);

    std::vector<std::vector<i64>> rows;
    if (cache.load_table(table, "p,ap", &rows) && rows.size() >= ps.size()) {
        bool usable = true;
        for (size_t i = 0; i < ps.size(); ++i)
            if (rows[i].size() != 2 || rows[i][0] != ps[i]) { usable = false; break; }
        if (usable) {
            std::vector<std::pair<i64, i64>> out;
            out.reserve(ps.size());
            for (size_t i = 0; i < ps.size(); ++i) out.emplace_back(rows[i][0], rows[i][1]);
            return out;
        }
    }

    std::vector<std::pair<i64, i64>> out(ps.size());
    parallel_for(static_cast<i64>(ps.size()), workers, [&](i64 i) {
        i64 p = ps[static_cast<size_t>(i)];
        i64 ap;
        if ((c == AuxCurve::E0 && p % 3 == 2) || (c != AuxCurve::E0 && p % 4 == 3)) {
            ap = 0;
        } else {
            auto sq = square_bitmap(p);
            ap = ap_fast(c, p, sq);
        }
        out[static_cast<size_t>(i)] = {p, ap};
    });

    if (cache.enabled()) {
        rows.clear();
        rows.reserve(out.size());
        for (auto& [p, ap] : out) rows.push_back({p, ap});
        cache.store_table(table, "p,ap", rows);
    }
    return out;
}

}  // namespace twistlab::aptables
