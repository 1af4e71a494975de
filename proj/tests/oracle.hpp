#pragma once

// Independent single-variable q-series oracle used by the tests: dense
// int64 coefficient vectors, index = q-exponent.  Deliberately shares no code
// with the library's series engine.

#include <cassert>
#include <cstdint>
#include <vector>

namespace oracle {

using Dense = std::vector<long long>;  // coefficients of q^0 .. q^N

inline Dense dconst(long long c, int N) {
    Dense d(N + 1, 0);
    d[0] = c;
    return d;
}

inline Dense dmul(const Dense& a, const Dense& b) {
    int N = static_cast<int>(a.size()) - 1;
    Dense out(N + 1, 0);
    for (int i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline Dense dadd(const Dense& a, const Dense& b) {
    Dense out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline Dense dsub(const Dense& a, const Dense& b) {
    Dense out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

// multiply by (1 + s q^k), s = +-1
inline void dfactor(Dense& d, int s, int k) {
    int N = static_cast<int>(d.size()) - 1;
    for (int i = N; i >= 0; --i)
        if (d[i] != 0 && i + k <= N) d[i + k] += s * d[i];
}

// (s q^{k0}; q^step)_n  as prod (1 - s q^{k0 + step j})
inline Dense dpoch(int s, int k0, int step, int n, int N) {
    Dense d = dconst(1, N);
    for (int j = 0; j < n; ++j) dfactor(d, -s, k0 + step * j);
    return d;
}

// (s q^{k0}; q^step)_inf truncated to N
inline Dense dpoch_inf(int s, int k0, int step, int N) {
    Dense d = dconst(1, N);
    for (int j = 0; k0 + step * j <= N; ++j) dfactor(d, -s, k0 + step * j);
    return d;
}

// inverse of a series with constant term 1
inline Dense dinv(const Dense& a) {
    assert(a[0] == 1);
    int N = static_cast<int>(a.size()) - 1;
    Dense out(N + 1, 0);
    out[0] = 1;
    for (int k = 1; k <= N; ++k) {
        long long s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * out[k - j];
        out[k] = -s;
    }
    return out;
}

// shift by q^k
inline Dense dshift(const Dense& a, int k) {
    Dense out(a.size(), 0);
    for (size_t i = 0; i + k < a.size(); ++i) out[i + k] = a[i];
    return out;
}

// the third order mock theta function omega(q) = sum q^{2n^2+2n} / (q;q^2)_{n+1}^2
inline Dense omega(int N) {
    Dense out(N + 1, 0);
    for (int n = 0; 2 * n * n + 2 * n <= N; ++n) {
        Dense den = dpoch(1, 1, 2, n + 1, N);
        Dense term = dshift(dinv(den), 0);
        term = dmul(term, dinv(den));
        term = dshift(term, 2 * n * n + 2 * n);
        out = dadd(out, term);
    }
    return out;
}

// nu(q) = sum q^{n^2+n} / (-q;q^2)_{n+1}
inline Dense nu(int N) {
    Dense out(N + 1, 0);
    for (int n = 0; n * n + n <= N; ++n) {
        Dense den = dpoch(-1, 1, 2, n + 1, N);
        Dense term = dshift(dinv(den), n * n + n);
        out = dadd(out, term);
    }
    return out;
}

// phi(q) = sum q^{n^2} / (-q^2;q^2)_n
inline Dense phi(int N) {
    Dense out(N + 1, 0);
    for (int n = 0; n * n <= N; ++n) {
        Dense den = dpoch(-1, 2, 2, n, N);
        Dense term = dshift(dinv(den), n * n);
        out = dadd(out, term);
    }
    return out;
}

// overpartition generating function (-q;q)_inf / (q;q)_inf
inline Dense overpartition_gf(int N) {
    return dmul(dpoch_inf(-1, 1, 1, N), dinv(dpoch_inf(1, 1, 1, N)));
}

inline Dense q_negate(const Dense& a) {
    Dense out = a;
    for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return out;
}

}  // namespace oracle
