#include "lgb/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace lgb {

SmithResult smith_normal_form(IntMat a) {
    const size_t m = a.size();
    const size_t n = m == 0 ? 0 : a[0].size();

    IntMat c(n, std::vector<Integer>(n, 0));
    for (size_t i = 0; i < n; ++i) c[i][i] = 1;

    auto swap_rows = [&](size_t i, size_t j) { std::swap(a[i], a[j]); };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < n; ++r) std::swap(c[r][i], c[r][j]);
    };
    auto add_row = [&](size_t dst, size_t src, const Integer& f) {
        for (size_t k = 0; k < n; ++k) a[dst][k] += f * a[src][k];
    };
    auto add_col = [&](size_t dst, size_t src, const Integer& f) {
        for (size_t r = 0; r < m; ++r) a[r][dst] += f * a[r][src];
        for (size_t r = 0; r < n; ++r) c[r][dst] += f * c[r][src];
    };
    auto negate_col = [&](size_t j) {
        for (size_t r = 0; r < m; ++r) a[r][j] = -a[r][j];
        for (size_t r = 0; r < n; ++r) c[r][j] = -c[r][j];
    };

    const size_t k = std::min(m, n);
    for (size_t t = 0; t < k; ++t) {
        for (;;) {
            // find a nonzero pivot of minimal absolute value in the trailing block
            size_t pr = t, pc = t;
            bool found = false;
            Integer best;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j) {
                    if (a[i][j] == 0) continue;
                    Integer v = abs(a[i][j]);
                    if (!found || v < best) {
                        best = v;
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            if (!found) goto done_block;  // trailing block is zero
            if (pr != t) swap_rows(t, pr);
            if (pc != t) swap_cols(t, pc);

            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                if (q != 0) add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                if (q != 0) add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders appeared, re-pivot

            // divisibility: pivot must divide every trailing entry
            bool divides_all = true;
            for (size_t i = t + 1; i < m && divides_all; ++i)
                for (size_t j = t + 1; j < n && divides_all; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);  // pulls the offending row in, retry
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (a[t][t] < 0) negate_col(t);
    }
done_block:

    SmithResult out;
    out.diag.resize(k, Integer(0));
    for (size_t t = 0; t < k; ++t) out.diag[t] = a[t][t] < 0 ? Integer(-a[t][t]) : a[t][t];
    out.c = std::move(c);
    return out;
}

}  // namespace lgb
