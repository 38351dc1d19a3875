// Exact Smith normal form: checked int64 fast path, GMP fallback on overflow.
#include "confspace/snf.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace confspace {

namespace {

struct Overflow {};

// int64 wrapper that throws Overflow instead of wrapping.
struct Chk {
    long long v = 0;
    Chk() = default;
    Chk(long long x) : v(x) {}
    friend Chk operator+(Chk a, Chk b) {
        Chk r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Chk operator-(Chk a, Chk b) {
        Chk r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Chk operator*(Chk a, Chk b) {
        Chk r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Chk operator-(Chk a) {
        if (a.v == LLONG_MIN) throw Overflow{};
        return Chk{-a.v};
    }
    friend Chk operator/(Chk a, Chk b) {
        if (a.v == LLONG_MIN && b.v == -1) throw Overflow{};
        return Chk{a.v / b.v};
    }
    friend Chk operator%(Chk a, Chk b) {
        if (a.v == LLONG_MIN && b.v == -1) throw Overflow{};
        return Chk{a.v % b.v};
    }
    Chk& operator+=(Chk b) { return *this = *this + b; }
    friend bool operator==(Chk a, Chk b) { return a.v == b.v; }
    friend bool operator!=(Chk a, Chk b) { return a.v != b.v; }
    friend bool operator<(Chk a, Chk b) { return a.v < b.v; }
};

Chk abs_value(Chk a) {
    if (a.v == LLONG_MIN) throw Overflow{};
    return Chk{a.v < 0 ? -a.v : a.v};
}
mpz_class abs_value(const mpz_class& a) { return abs(a); }

// gmpxx has no long long constructor; long is 64-bit here.
static_assert(sizeof(long) == sizeof(long long));
mpz_class ll_to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

template <class T>
T from_ll(long long v) {
    return T(v);
}
template <>
mpz_class from_ll<mpz_class>(long long v) {
    return ll_to_mpz(v);
}

mpz_class to_mpz(Chk a) { return ll_to_mpz(a.v); }
const mpz_class& to_mpz(const mpz_class& a) { return a; }

// g = a*x + b*y with g = gcd(a, b) >= 0. Truncated division keeps the
// invariants valid for negative inputs.
template <class T>
void ext_gcd(T a, T b, T& g, T& x, T& y) {
    T old_r = a, r = b;
    T old_s = 1, s = 0;
    T old_t = 0, t = 1;
    while (r != T(0)) {
        T q = old_r / r;
        T tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    g = old_r;
    x = old_s;
    y = old_t;
    if (g < T(0)) {
        g = -g;
        x = -x;
        y = -y;
    }
}

template <class T>
struct DenseWork {
    int rows = 0, cols = 0;
    std::vector<std::vector<T>> a, u, ui, v, vi;

    template <class S>
    explicit DenseWork(const std::vector<std::vector<S>>& src, int r, int c)
        : rows(r), cols(c) {
        a.assign(rows, std::vector<T>(cols, T(0)));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if constexpr (std::is_same_v<S, long long>)
                    a[i][j] = from_ll<T>(src[i][j]);
                else
                    a[i][j] = T(src[i][j]);
            }
        u.assign(rows, std::vector<T>(rows, T(0)));
        ui.assign(rows, std::vector<T>(rows, T(0)));
        for (int i = 0; i < rows; ++i) u[i][i] = ui[i][i] = T(1);
        v.assign(cols, std::vector<T>(cols, T(0)));
        vi.assign(cols, std::vector<T>(cols, T(0)));
        for (int i = 0; i < cols; ++i) v[i][i] = vi[i][i] = T(1);
    }

    // row dst += c * row src
    void row_add(int dst, int src, const T& c) {
        for (int j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
        for (int j = 0; j < rows; ++j) u[dst][j] += c * u[src][j];
        for (int i = 0; i < rows; ++i) ui[i][src] += -c * ui[i][dst];
    }
    void col_add(int dst, int src, const T& c) {
        for (int i = 0; i < rows; ++i) a[i][dst] += c * a[i][src];
        for (int i = 0; i < cols; ++i) v[i][dst] += c * v[i][src];
        for (int j = 0; j < cols; ++j) vi[src][j] += -c * vi[dst][j];
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
        for (int r = 0; r < rows; ++r) std::swap(ui[r][i], ui[r][j]);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
        std::swap(vi[i], vi[j]);
    }
    void row_negate(int i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
        for (int r = 0; r < rows; ++r) ui[r][i] = -ui[r][i];
    }
    // rows (i, j) <- (x ri + y rj, z ri + w rj), det(x w - y z) = 1
    void row_combine(int i, int j, const T& x, const T& y, const T& z, const T& w) {
        for (int c = 0; c < cols; ++c) {
            T p = a[i][c], q = a[j][c];
            a[i][c] = x * p + y * q;
            a[j][c] = z * p + w * q;
        }
        for (int c = 0; c < rows; ++c) {
            T p = u[i][c], q = u[j][c];
            u[i][c] = x * p + y * q;
            u[j][c] = z * p + w * q;
        }
        for (int r = 0; r < rows; ++r) {
            T p = ui[r][i], q = ui[r][j];
            ui[r][i] = w * p - z * q;
            ui[r][j] = -y * p + x * q;
        }
    }
    // cols (i, j) <- (x ci + y cj, z ci + w cj)
    void col_combine(int i, int j, const T& x, const T& y, const T& z, const T& w) {
        for (int r = 0; r < rows; ++r) {
            T p = a[r][i], q = a[r][j];
            a[r][i] = x * p + y * q;
            a[r][j] = z * p + w * q;
        }
        for (int r = 0; r < cols; ++r) {
            T p = v[r][i], q = v[r][j];
            v[r][i] = x * p + y * q;
            v[r][j] = z * p + w * q;
        }
        for (int c = 0; c < cols; ++c) {
            T p = vi[i][c], q = vi[j][c];
            vi[i][c] = w * p - z * q;
            vi[j][c] = -y * p + x * q;
        }
    }
};

// Pivot: smallest |value|, then fewest nonzeros in its row (denser rows last),
// then lowest (row, col).
template <class T>
bool find_pivot(const std::vector<std::vector<T>>& a, int from, int rows, int cols,
                int& pi, int& pj) {
    pi = pj = -1;
    T best_abs(0);
    int best_nnz = 0;
    for (int i = from; i < rows; ++i) {
        int nnz = 0;
        for (int j = from; j < cols; ++j)
            if (a[i][j] != T(0)) ++nnz;
        if (nnz == 0) continue;
        for (int j = from; j < cols; ++j) {
            if (a[i][j] == T(0)) continue;
            T av = abs_value(a[i][j]);
            if (pi < 0 || av < best_abs || (av == best_abs && nnz < best_nnz)) {
                pi = i;
                pj = j;
                best_abs = av;
                best_nnz = nnz;
            }
        }
    }
    return pi >= 0;
}

template <class T>
int snf_core(DenseWork<T>& w) {
    int r = 0;
    const int m = w.rows, n = w.cols;
    while (true) {
        int pi, pj;
        if (!find_pivot(w.a, r, m, n, pi, pj)) break;
        w.row_swap(r, pi);
        w.col_swap(r, pj);
        while (true) {
            for (int i = r + 1; i < m; ++i) {
                if (w.a[i][r] == T(0)) continue;
                T p = w.a[r][r], b = w.a[i][r];
                if (b % p == T(0)) {
                    w.row_add(i, r, -(b / p));
                } else {
                    T g, x, y;
                    ext_gcd(p, b, g, x, y);
                    w.row_combine(r, i, x, y, -(b / g), p / g);
                }
            }
            for (int j = r + 1; j < n; ++j) {
                if (w.a[r][j] == T(0)) continue;
                T p = w.a[r][r], b = w.a[r][j];
                if (b % p == T(0)) {
                    w.col_add(j, r, -(b / p));
                } else {
                    T g, x, y;
                    ext_gcd(p, b, g, x, y);
                    w.col_combine(r, j, x, y, -(b / g), p / g);
                }
            }
            bool clean = true;
            for (int i = r + 1; i < m && clean; ++i) clean = w.a[i][r] == T(0);
            for (int j = r + 1; j < n && clean; ++j) clean = w.a[r][j] == T(0);
            if (clean) break;
        }
        ++r;
    }
    for (int i = 0; i < r; ++i)
        if (w.a[i][i] < T(0)) w.row_negate(i);
    // Enforce d_1 | d_2 | ... by adjacent gcd/lcm exchanges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < r; ++i) {
            T da = w.a[i][i], db = w.a[i + 1][i + 1];
            if (db % da == T(0)) continue;
            changed = true;
            w.col_add(i, i + 1, T(1));
            T g, x, y;
            ext_gcd(da, db, g, x, y);
            w.row_combine(i, i + 1, x, y, -(db / g), da / g);
            T off = w.a[i][i + 1];
            w.col_add(i + 1, i, -(off / w.a[i][i]));
        }
    }
    return r;
}

template <class T>
SmithDecomposition pack(DenseWork<T>& w, int rank) {
    SmithDecomposition out;
    out.rows = w.rows;
    out.cols = w.cols;
    out.rank = rank;
    int d = std::min(w.rows, w.cols);
    out.diagonal.reserve(d);
    for (int i = 0; i < d; ++i) out.diagonal.push_back(to_mpz(w.a[i][i]));
    auto conv = [](const std::vector<std::vector<T>>& m) {
        DenseMatrix out_m(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            out_m[i].reserve(m[i].size());
            for (const auto& x : m[i]) out_m[i].push_back(to_mpz(x));
        }
        return out_m;
    };
    out.U = conv(w.u);
    out.Uinv = conv(w.ui);
    out.V = conv(w.v);
    out.Vinv = conv(w.vi);
    return out;
}

template <class S>
SmithDecomposition snf_dense(const std::vector<std::vector<S>>& src, int rows, int cols) {
    try {
        DenseWork<Chk> w(src, rows, cols);
        int rank = snf_core(w);
        return pack(w, rank);
    } catch (const Overflow&) {
        DenseWork<mpz_class> w(src, rows, cols);
        int rank = snf_core(w);
        return pack(w, rank);
    }
}

}  // namespace

DenseMatrix SmithDecomposition::D() const {
    DenseMatrix d(rows, std::vector<mpz_class>(cols, 0));
    for (int i = 0; i < std::min(rows, cols); ++i) d[i][i] = diagonal[i];
    return d;
}

SmithDecomposition smith_normal_form(const std::vector<std::vector<long long>>& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix");
    return snf_dense(a, rows, cols);
}

SmithDecomposition smith_normal_form(const DenseMatrix& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix");
    bool fits = true;
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.fits_slong_p()) fits = false;
    if (fits) {
        std::vector<std::vector<long long>> small(rows, std::vector<long long>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) small[i][j] = a[i][j].get_si();
        return snf_dense(small, rows, cols);
    }
    DenseWork<mpz_class> w(a, rows, cols);
    int rank = snf_core(w);
    return pack(w, rank);
}

namespace {

// Sparse elimination, diagonal only: rows as ordered maps, a per-column row
// index, Markowitz-flavoured pivoting.
template <class T>
struct SparseWork {
    int rows, cols;
    std::vector<std::map<int, T>> row;
    std::vector<std::set<int>> colrows;
    std::vector<char> row_done, col_done;

    explicit SparseWork(const SparseMatrix& src) : rows(src.rows), cols(src.cols) {
        row.resize(rows);
        colrows.resize(cols);
        row_done.assign(rows, 0);
        col_done.assign(cols, 0);
        for (int j = 0; j < cols; ++j)
            for (const auto& [i, val] : src.col[j]) {
                row[i][j] = from_ll<T>(val);
                colrows[j].insert(i);
            }
    }

    void put(int i, int j, const T& val) {
        if (val == T(0)) {
            row[i].erase(j);
            colrows[j].erase(i);
        } else {
            row[i][j] = val;
            colrows[j].insert(i);
        }
    }
    T get(int i, int j) const {
        auto it = row[i].find(j);
        return it == row[i].end() ? T(0) : it->second;
    }

    void row_axpy(int dst, int src, const T& c) {
        for (const auto& [j, val] : row[src]) put(dst, j, get(dst, j) + c * val);
    }
    void row_combine(int i, int j, const T& x, const T& y, const T& z, const T& w) {
        auto ri = row[i], rj = row[j];
        std::set<int> touched;
        for (const auto& [c, val] : ri) touched.insert(c);
        for (const auto& [c, val] : rj) touched.insert(c);
        for (int c : touched) {
            T p = ri.count(c) ? ri[c] : T(0);
            T q = rj.count(c) ? rj[c] : T(0);
            put(i, c, x * p + y * q);
            put(j, c, z * p + w * q);
        }
    }
    void col_axpy(int dst, int src, const T& c) {
        std::vector<int> touched(colrows[src].begin(), colrows[src].end());
        for (int r : touched) put(r, dst, get(r, dst) + c * row[r][src]);
    }
    void col_combine(int i, int j, const T& x, const T& y, const T& z, const T& w) {
        std::set<int> touched(colrows[i].begin(), colrows[i].end());
        touched.insert(colrows[j].begin(), colrows[j].end());
        for (int r : touched) {
            T p = get(r, i), q = get(r, j);
            put(r, i, x * p + y * q);
            put(r, j, z * p + w * q);
        }
    }

    bool find_pivot(int& pi, int& pj) const {
        pi = pj = -1;
        T best_abs(0);
        std::size_t best_nnz = 0;
        for (int i = 0; i < rows; ++i) {
            if (row_done[i] || row[i].empty()) continue;
            std::size_t nnz = row[i].size();
            for (const auto& [j, val] : row[i]) {
                T av = abs_value(val);
                if (pi < 0 || av < best_abs || (av == best_abs && nnz < best_nnz)) {
                    pi = i;
                    pj = j;
                    best_abs = av;
                    best_nnz = nnz;
                }
            }
            if (best_abs == T(1) && best_nnz == 1) break;
        }
        return pi >= 0;
    }
};

template <class T>
std::vector<mpz_class> sparse_core(SparseWork<T>& w, int& rank) {
    std::vector<mpz_class> diag;
    while (true) {
        int pi, pj;
        if (!w.find_pivot(pi, pj)) break;
        while (true) {
            std::vector<int> below(w.colrows[pj].begin(), w.colrows[pj].end());
            for (int i : below) {
                if (i == pi) continue;
                T p = w.get(pi, pj), b = w.get(i, pj);
                if (b == T(0)) continue;
                if (b % p == T(0)) {
                    w.row_axpy(i, pi, -(b / p));
                } else {
                    T g, x, y;
                    ext_gcd(p, b, g, x, y);
                    w.row_combine(pi, i, x, y, -(b / g), p / g);
                }
            }
            std::vector<int> across;
            for (const auto& [j, val] : w.row[pi])
                if (j != pj) across.push_back(j);
            for (int j : across) {
                T p = w.get(pi, pj), b = w.get(pi, j);
                if (b == T(0)) continue;
                if (b % p == T(0)) {
                    w.col_axpy(j, pj, -(b / p));
                } else {
                    T g, x, y;
                    ext_gcd(p, b, g, x, y);
                    w.col_combine(pj, j, x, y, -(b / g), p / g);
                }
            }
            if (w.colrows[pj].size() == 1 && w.row[pi].size() == 1) break;
        }
        diag.push_back(abs_value(to_mpz(w.get(pi, pj))));
        w.row_done[pi] = 1;
        w.col_done[pj] = 1;
    }
    rank = static_cast<int>(diag.size());
    // Invariant factors: gcd/lcm exchanges to a divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            changed = true;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[i + 1].get_mpz_t());
            mpz_class l = diag[i] / g * diag[i + 1];
            diag[i] = g;
            diag[i + 1] = l;
        }
    }
    return diag;
}

}  // namespace

SmithDiagonal smith_diagonal(const SparseMatrix& a) {
    try {
        SparseWork<Chk> w(a);
        SmithDiagonal out;
        out.diagonal = sparse_core(w, out.rank);
        return out;
    } catch (const Overflow&) {
        SparseWork<mpz_class> w(a);
        SmithDiagonal out;
        out.diagonal = sparse_core(w, out.rank);
        return out;
    }
}

DenseMatrix to_dense(const SparseMatrix& a) {
    DenseMatrix m(a.rows, std::vector<mpz_class>(a.cols, 0));
    for (int j = 0; j < a.cols; ++j)
        for (const auto& [i, val] : a.col[j]) m[i][j] = ll_to_mpz(val);
    return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    std::size_t n = a.size();
    std::size_t inner = n == 0 ? 0 : a[0].size();
    if (inner != b.size()) throw std::invalid_argument("matmul shape mismatch");
    std::size_t m = b.empty() ? 0 : b[0].size();
    DenseMatrix out(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool is_identity(const DenseMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace confspace
