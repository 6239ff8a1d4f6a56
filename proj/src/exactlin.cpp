#include "rootpoly/exactlin.hpp"

#include <algorithm>

namespace rootpoly {

Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int den(const Rat& q) { return boost::multiprecision::denominator(q); }
bool is_integral(const Rat& q) { return den(q) == 1; }

Int to_int(const Rat& q) {
    internal_check(is_integral(q), "to_int: value is not an integer");
    return num(q);
}

QVec to_qvec(const IVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

std::optional<IVec> to_ivec(const QVec& v) {
    IVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integral(v[i])) return std::nullopt;
        out[i] = num(v[i]);
    }
    return out;
}

Rat dot(const QVec& a, const QVec& b) {
    internal_check(a.size() == b.size(), "dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const IVec& a, const IVec& b) {
    internal_check(a.size() == b.size(), "dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec add(const IVec& a, const IVec& b) {
    internal_check(a.size() == b.size(), "add: dimension mismatch");
    IVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IVec sub(const IVec& a, const IVec& b) {
    internal_check(a.size() == b.size(), "sub: dimension mismatch");
    IVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVec add(const QVec& a, const QVec& b) {
    internal_check(a.size() == b.size(), "add: dimension mismatch");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVec sub(const QVec& a, const QVec& b) {
    internal_check(a.size() == b.size(), "sub: dimension mismatch");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVec scale(const QVec& a, const Rat& c) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool lex_less(const QVec& a, const QVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IVec& a, const IVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Int content(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

IVec primitive(const IVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IVec primitive(const QVec& v) {
    Int lcm = 1;
    for (const Rat& q : v) lcm = boost::multiprecision::lcm(lcm, den(q));
    IVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = num(v[i]) * (lcm / den(v[i]));
    return primitive(scaled);
}

std::string to_string(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

IMat IMat::identity(std::size_t n) {
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rs) {
    IMat m(rs.size(), rs.empty() ? 0 : rs[0].size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        internal_check(rs[i].size() == m.cols, "from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
}

IVec IMat::row(std::size_t i) const {
    IVec r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

std::vector<IVec> IMat::row_list() const {
    std::vector<IVec> rs;
    rs.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) rs.push_back(row(i));
    return rs;
}

QMat QMat::from_rows(const std::vector<QVec>& rs) {
    QMat m(rs.size(), rs.empty() ? 0 : rs[0].size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        internal_check(rs[i].size() == m.cols, "from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
}

QVec QMat::row(std::size_t i) const {
    QVec r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IMat mul(const IMat& a, const IMat& b) {
    internal_check(a.cols == b.rows, "mul: dimension mismatch");
    IMat c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IVec mul(const IMat& a, const IVec& v) {
    internal_check(a.cols == v.size(), "mul: dimension mismatch");
    IVec out(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * v[j];
    return out;
}

QVec mul(const QMat& a, const QVec& v) {
    internal_check(a.cols == v.size(), "mul: dimension mismatch");
    QVec out(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * v[j];
    return out;
}

IMat transpose(const IMat& m) {
    IMat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Int determinant(const IMat& m) {
    if (m.rows != m.cols) throw DomainError("determinant: matrix is not square");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev; // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

void swap_rows(IMat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IMat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row i += f * row j
void add_row(IMat& m, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}

void add_col(IMat& m, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}

void negate_row(IMat& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// Floor division for cpp_int (operator/ truncates toward zero).
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

} // namespace

SmithForm smith_normal_form(const IMat& m) {
    SmithForm f;
    f.d = m;
    f.u = IMat::identity(m.rows);
    f.v = IMat::identity(m.cols);
    IMat& d = f.d;
    std::size_t t = 0;
    std::size_t lim = std::min(m.rows, m.cols);
    while (t < lim) {
        // pivot-minimization: smallest nonzero absolute value in the tail
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < d.rows; ++i)
            for (std::size_t j = t; j < d.cols; ++j) {
                Int v = boost::multiprecision::abs(d.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break; // tail is zero
        swap_rows(d, t, pi);
        swap_rows(f.u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(f.v, t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < d.rows; ++i) {
            if (d.at(i, t) == 0) continue;
            Int q = fdiv(d.at(i, t), d.at(t, t));
            add_row(d, i, t, -q);
            add_row(f.u, i, t, -q);
            if (d.at(i, t) != 0) clean = false; // remainder stays; re-pivot
        }
        for (std::size_t j = t + 1; j < d.cols; ++j) {
            if (d.at(t, j) == 0) continue;
            Int q = fdiv(d.at(t, j), d.at(t, t));
            add_col(d, j, t, -q);
            add_col(f.v, j, t, -q);
            if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller pivot now exists in the tail

        // divisibility: pivot must divide everything below-right
        bool redo = false;
        for (std::size_t i = t + 1; i < d.rows && !redo; ++i)
            for (std::size_t j = t + 1; j < d.cols && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    add_row(d, t, i, 1);
                    add_row(f.u, t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(f.u, t);
        }
        ++t;
    }
    f.rank = t;
    return f;
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> out;
    std::size_t lim = std::min(d.rows, d.cols);
    for (std::size_t i = 0; i < lim; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Reduced row echelon form; returns pivot column of each pivot row.
std::vector<std::size_t> rref(QMat& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a.at(p, c) == 0) ++p;
        if (p == a.rows) continue;
        for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(p, j));
        Rat inv = a.at(r, c);
        for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) /= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat fac = a.at(i, c);
            for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) -= fac * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
    internal_check(a.rows == b.size(), "solve_rational: dimension mismatch");
    QMat aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt; // 0 = 1 row
    QVec x(a.cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols);
    return x;
}

std::size_t rank(const QMat& m) {
    QMat a = m;
    return rref(a).size();
}

std::size_t lattice_rank(const IMat& m) {
    QMat a(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) a.data[i] = Rat(m.data[i]);
    return rank(a);
}

std::vector<QVec> kernel(const QMat& m) {
    QMat a = m;
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        QVec x(m.cols, Rat(0));
        x[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a.at(r, c);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<IVec> integer_kernel(const IMat& m) {
    // U m V = D; kernel basis = columns of V past the rank.
    SmithForm f = smith_normal_form(m);
    std::vector<IVec> basis;
    for (std::size_t c = f.rank; c < m.cols; ++c) {
        IVec x(m.cols);
        for (std::size_t r = 0; r < m.cols; ++r) x[r] = f.v.at(r, c);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<IVec> saturated_row_basis(const IMat& m) {
    // U m V = D. The first r rows of U^{-1} scaled back give a basis of the
    // saturation; equivalently, rows of D^{-1} U m restricted to the rank
    // block. Work instead with the transpose-free identity: the saturation
    // of the row space is the integer kernel of a basis of the kernel.
    std::vector<IVec> ker = integer_kernel(m);
    if (ker.empty()) {
        // full column rank: saturation is Z^cols
        std::vector<IVec> basis;
        for (std::size_t i = 0; i < m.cols; ++i) {
            IVec e(m.cols);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    IMat k = IMat::from_rows(ker);
    return integer_kernel(k);
}

std::vector<IVec> row_lattice_basis(const IMat& m) {
    // U m V = D  =>  m = U^{-1} D V^{-1}; the row lattice equals the row
    // lattice of D V^{-1}, whose nonzero rows are d_i * (row i of V^{-1}).
    SmithForm f = smith_normal_form(m);
    // rows of V^{-1}: solve V^T x = e_i ... cheaper: V is unimodular, invert
    // by SNF of V itself via adjugate-free elimination over Q then round.
    QMat vq(f.v.rows, f.v.cols);
    for (std::size_t i = 0; i < f.v.data.size(); ++i) vq.data[i] = Rat(f.v.data[i]);
    std::vector<IVec> basis;
    for (std::size_t i = 0; i < f.rank; ++i) {
        // row i of D V^{-1}: d_i * e_i^T V^{-1}: solve y V = d_i e_i^T, i.e.
        // V^T y^T = d_i e_i.
        QMat vt(f.v.cols, f.v.rows);
        for (std::size_t r = 0; r < f.v.rows; ++r)
            for (std::size_t c = 0; c < f.v.cols; ++c) vt.at(c, r) = Rat(f.v.at(r, c));
        QVec rhs(f.v.cols, Rat(0));
        rhs[i] = Rat(f.d.at(i, i));
        auto sol = solve_rational(vt, rhs);
        internal_check(sol.has_value(), "row_lattice_basis: unimodular solve failed");
        auto iv = to_ivec(*sol);
        internal_check(iv.has_value(), "row_lattice_basis: non-integer basis row");
        basis.push_back(*iv);
    }
    return basis;
}

std::optional<IVec> in_lattice(const std::vector<IVec>& basis, const IVec& v) {
    if (basis.empty()) return is_zero(v) ? std::optional<IVec>(IVec{}) : std::nullopt;
    std::size_t n = basis[0].size();
    QMat a(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) a.at(i, j) = Rat(basis[j][i]);
    auto sol = solve_rational(a, to_qvec(v));
    if (!sol) return std::nullopt;
    auto iv = to_ivec(*sol);
    if (!iv) return std::nullopt;
    // solve_rational returns one solution; basis vectors are independent for
    // every caller, so it is the only one.
    return iv;
}

} // namespace rootpoly
