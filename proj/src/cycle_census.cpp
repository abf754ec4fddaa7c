#include "vfap/cycle_census.hpp"

#include <algorithm>
#include <string>

namespace vfap {

namespace {

int64_t cadd(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw IntegerOverflow("cycle count exceeds 64-bit range");
    return r;
}

int64_t cmul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw IntegerOverflow("cycle count exceeds 64-bit range");
    return r;
}

// pairs out of p: p*(p-1)/2
int64_t cc(int64_t p) { return cmul(p, p - 1) / 2; }

// pairs out of p-1, clamped so p = 0 contributes nothing
int64_t ccm1(int64_t p) { return p >= 1 ? cmul(p - 1, p - 2) / 2 : 0; }

std::vector<int64_t> minus_one(std::vector<int64_t> v) {
    for (auto& x : v) --x;
    return v;
}

IntMatrix col_broadcast(const std::vector<int64_t>& v, int rows) {
    IntMatrix out(rows, static_cast<int>(v.size()));
    for (int i = 0; i < rows; ++i)
        for (size_t j = 0; j < v.size(); ++j) out.at(i, static_cast<int>(j)) = v[j];
    return out;
}

IntMatrix row_broadcast(const std::vector<int64_t>& v, int cols) {
    IntMatrix out(static_cast<int>(v.size()), cols);
    for (size_t i = 0; i < v.size(); ++i)
        for (int j = 0; j < cols; ++j) out.at(static_cast<int>(i), j) = v[i];
    return out;
}

}  // namespace

IntMatrix IntMatrix::times(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::logic_error("IntMatrix::times: shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            int64_t a = at(i, k);
            if (a == 0) continue;
            const int64_t* brow = &rhs.data_[static_cast<size_t>(k) * rhs.cols_];
            int64_t* orow = &out.data_[static_cast<size_t>(i) * rhs.cols_];
            for (int j = 0; j < rhs.cols_; ++j)
                if (brow[j] != 0) orow[j] = cadd(orow[j], cmul(a, brow[j]));
        }
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::hadamard(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::logic_error("IntMatrix::hadamard: shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = cmul(data_[k], rhs.data_[k]);
    return out;
}

IntMatrix IntMatrix::plus(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::logic_error("IntMatrix::plus: shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = cadd(data_[k], rhs.data_[k]);
    return out;
}

IntMatrix IntMatrix::minus(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::logic_error("IntMatrix::minus: shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = cadd(data_[k], -rhs.data_[k]);
    return out;
}

IntMatrix IntMatrix::scaled(int64_t factor) const {
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = cmul(data_[k], factor);
    return out;
}

IntMatrix IntMatrix::scale_cols(const std::vector<int64_t>& w) const {
    if (static_cast<int>(w.size()) != cols_)
        throw std::logic_error("IntMatrix::scale_cols: weight length mismatch");
    IntMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = cmul(at(i, j), w[j]);
    return out;
}

IntMatrix IntMatrix::scale_rows(const std::vector<int64_t>& w) const {
    if (static_cast<int>(w.size()) != rows_)
        throw std::logic_error("IntMatrix::scale_rows: weight length mismatch");
    IntMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = cmul(at(i, j), w[i]);
    return out;
}

IntMatrix IntMatrix::off_diagonal() const {
    IntMatrix out = *this;
    int d = std::min(rows_, cols_);
    for (int i = 0; i < d; ++i) out.at(i, i) = 0;
    return out;
}

IntMatrix IntMatrix::shifted(int64_t c) const {
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = cadd(data_[k], c);
    return out;
}

std::vector<int64_t> IntMatrix::diagonal() const {
    int d = std::min(rows_, cols_);
    std::vector<int64_t> out(d);
    for (int i = 0; i < d; ++i) out[i] = at(i, i);
    return out;
}

std::vector<int64_t> IntMatrix::row_sums() const {
    std::vector<int64_t> out(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] = cadd(out[i], at(i, j));
    return out;
}

std::vector<int64_t> IntMatrix::col_sums() const {
    std::vector<int64_t> out(cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[j] = cadd(out[j], at(i, j));
    return out;
}

// ---------------------------------------------------------------------------
// Walk tables
//
// One tower per start side. P[k](i,j) counts simple paths of length k from
// vertex i of the start side; even k lands back on the start side, odd k on
// the opposite side. Each extension P[k-1] * A overcounts by walks whose
// last edge revisits the path: a backtrack (degenerate 2-cycle at the end)
// or a lollipop walk (simple tail + simple cycle sharing one vertex).
//
// closed[2k](i) is the diagonal of P[2k-1] * A, i.e. closed walks that are
// simple until the final returning edge: exactly the length-2k cycles
// through i, once per traversal direction.
//
// Correction tables used below, with F_c(i,j) = cycles of length c through
// edge (i,j) and QQ = P2 * (P2 - 1) elementwise:
//   tail 1 + 4-cycle:   L14 = adj . d4'(j) - 2 F4
//   tail 2 + 4-cycle:   L24 = P2 . d4(j) - 2 P2.cc(P2) - 2 offd(adj F4^T) + 2 QQ
//   tail 3 + 4-cycle:   L34, split by whether the (i,j) edge exists
//   tail 1 + 6-cycle:   L16, using the two-disjoint-3-path decomposition
// and their penultimate-vertex counterparts Lt14, Lt24 entering the
// backtrack terms. Primes mark tables of the opposite tower.
// ---------------------------------------------------------------------------

struct Tower {
    IntMatrix adj, adjT;
    std::vector<int64_t> sdeg, odeg;  // start-side / opposite-side degrees
    std::vector<IntMatrix> P;         // P[k]; index 0 unused
    std::map<int, std::vector<int64_t>> closed;
    IntMatrix F4, F6;

    const IntMatrix& mult(int step) const { return (step % 2 == 1) ? adj : adjT; }
};

struct WalkTables::Impl {
    Tower c, v;          // towers from the check and variable sides
    int built = 2;       // largest even length with closed[] populated
    std::optional<int> girth;
    int m = 0, n = 0;

    Impl(const ParityCheckMatrix& h) {
        m = h.m();
        n = h.n();
        IntMatrix e(m, n);
        for (int i = 0; i < m; ++i)
            for (int j : h.row(i)) e.at(i, j) = 1;
        c.adj = e;
        c.adjT = e.transposed();
        v.adj = c.adjT;
        v.adjT = e;
        c.sdeg = e.row_sums();
        c.odeg = e.col_sums();
        v.sdeg = c.odeg;
        v.odeg = c.sdeg;
        for (Tower* t : {&c, &v}) {
            t->P.resize(2);
            t->P[1] = t->adj;
        }
    }

    // P[len] for one tower; lengths 2..7 carry the full correction set and
    // are exact on any graph, longer lengths only in the regimes guarded by
    // ensure_supported().
    void advance(Tower& s, const Tower& o, int len) {
        const IntMatrix raw = s.P[len - 1].times(s.mult(len));
        IntMatrix p;
        switch (len) {
            case 2:
                p = raw.off_diagonal();
                break;
            case 3:
                p = raw.minus(s.P[1].scale_cols(minus_one(s.odeg)));
                break;
            case 4: {
                s.closed[4] = raw.diagonal();
                p = raw.off_diagonal().minus(s.P[2].scale_cols(minus_one(s.sdeg)));
                s.F4 = s.P[3].hadamard(s.adj);
                break;
            }
            case 5: {
                const IntMatrix b5 = s.P[3].scale_cols(minus_one(s.odeg)).minus(s.F4);
                const IntMatrix l14 =
                    s.adj.scale_cols(o.closed.at(4)).minus(s.F4.scaled(2));
                p = raw.minus(b5).minus(l14);
                break;
            }
            case 6: {
                s.closed[6] = raw.diagonal();
                s.F6 = s.P[5].hadamard(s.adj);
                const IntMatrix g4od = s.adj.times(s.F4.transposed()).off_diagonal();
                const IntMatrix qq = s.P[2].map([](int64_t x) { return cmul(x, x - 1); });
                const IntMatrix lt14 = g4od.minus(qq);
                const IntMatrix b6 = s.P[4].scale_cols(minus_one(s.sdeg)).minus(lt14);
                const IntMatrix l24 = s.P[2]
                                          .scale_cols(s.closed.at(4))
                                          .minus(s.P[2].map([](int64_t x) {
                                              return cmul(2, cmul(x, cc(x)));
                                          }))
                                          .minus(g4od.scaled(2))
                                          .plus(qq.scaled(2));
                p = raw.off_diagonal().minus(b6).minus(l24);
                break;
            }
            case 7: {
                const IntMatrix pf = s.P[2].times(s.F4);
                const IntMatrix qq = s.P[2].map([](int64_t x) { return cmul(x, x - 1); });
                const IntMatrix p2a = s.P[2].times(s.adj);
                const IntMatrix qqa = qq.times(s.adj);

                // backtrack term: paths of length 6 read at their
                // fifth vertex, minus closures through positions 0 and 2
                const IntMatrix y = o.P[2].shifted(-1).scale_rows(minus_one(s.odeg));
                const IntMatrix inner = p2a.plus(s.F4)
                                            .minus(row_broadcast(
                                                s.P[2]
                                                    .map([](int64_t x) { return cmul(x, x); })
                                                    .row_sums(),
                                                n_other(s)))
                                            .plus(row_broadcast(s.P[2].row_sums(),
                                                                n_other(s)).scaled(2))
                                            .minus(col_broadcast(o.closed.at(4), n_self(s)))
                                            .minus(col_broadcast(s.odeg, n_self(s)).scaled(3))
                                            .shifted(3);
                const IntMatrix lt24 =
                    pf.minus(s.adj.times(y)).plus(inner.hadamard(s.adj));
                const IntMatrix b7 =
                    s.P[5].scale_cols(minus_one(s.odeg)).minus(lt24).minus(s.F6);

                // tail-3 + 4-cycle lollipops; the closing (i,j) edge adds a
                // family of terms, hence the two branches
                std::vector<int64_t> c4o = o.closed.at(4);
                for (auto& x : c4o) x /= 2;
                const IntMatrix es0 = s.adj.times(o.P[2].map([](int64_t p) {
                    return cadd(cmul(p, p - 1), -cmul(p, cc(p)));
                }));
                const IntMatrix es1 = s.adj.times(o.P[2].map([](int64_t p) {
                    return cmul(p - 1, cadd(cmul(2, p - 1), -cc(p)));
                }));
                const IntMatrix base = s.P[3].scale_cols(c4o).minus(pf);
                const IntMatrix branch0 = base.plus(es0).scaled(2);
                const IntMatrix branch1 = base.minus(s.P[3].hadamard(s.F4))
                                              .minus(s.P[3])
                                              .plus(es1)
                                              .plus(col_broadcast(o.closed.at(4), n_self(s)))
                                              .plus(qqa)
                                              .plus(col_broadcast(s.odeg, n_self(s)))
                                              .minus(p2a)
                                              .minus(s.F4)
                                              .shifted(-3)
                                              .scaled(2);
                const IntMatrix l34 = branch0.minus(branch0.hadamard(s.adj))
                                          .plus(branch1.hadamard(s.adj));

                // tail-1 + 6-cycle lollipops; a 6-cycle through the edge's
                // endpoints either uses the edge or is two disjoint 3-paths
                const IntMatrix uo = o.P[2].map(ccm1).off_diagonal();
                const IntMatrix vm = s.P[2].map(ccm1).off_diagonal();
                const IntMatrix l16 = col_broadcast(o.closed.at(6), n_self(s))
                                          .minus(s.F6.scaled(2))
                                          .minus(s.P[3].map(cc).scaled(2))
                                          .plus(s.adj.times(uo).scaled(2))
                                          .plus(vm.times(s.adj).scaled(2))
                                          .hadamard(s.adj);

                p = raw.minus(b7).minus(l34).minus(l16);
                break;
            }
            default: {
                if (len % 2 == 0) {
                    s.closed[len] = raw.diagonal();
                    p = raw.off_diagonal().minus(s.P[len - 2].scale_cols(minus_one(s.sdeg)));
                } else if (girth && *girth == len - 1) {
                    // one even length with cycles exists below: girth-plus-2
                    // counting needs only the edge-level tables of length g
                    const IntMatrix fg = s.P[len - 2].hadamard(s.adj);
                    p = raw.minus(s.P[len - 2].scale_cols(minus_one(s.odeg)))
                            .plus(fg.scaled(3))
                            .minus(s.adj.scale_cols(o.closed.at(len - 1)));
                } else {
                    p = raw.minus(s.P[len - 2].scale_cols(minus_one(s.odeg)));
                }
                break;
            }
        }
        if (static_cast<int>(s.P.size()) <= len) s.P.resize(len + 1);
        s.P[len] = std::move(p);
    }

    static int n_self(const Tower& t) { return t.adj.rows(); }
    static int n_other(const Tower& t) { return t.adj.cols(); }

    // grows closed[] to the requested even length, keeping only regimes in
    // which the recursion is exact
    void ensure(int two_k, int cap) {
        if (two_k < 4 || two_k % 2 != 0)
            throw std::invalid_argument("cycle length must be even and at least 4");
        if (two_k > cap)
            throw LengthCapExceeded("cycle length " + std::to_string(two_k) +
                                    " exceeds search cap " + std::to_string(cap));
        while (built < two_k) {
            int next = built + 2;
            if (girth && next > 8 && next > *girth + 2)
                throw LengthCapExceeded(
                    "exact counting supports lengths up to 8, the girth, and girth+2; "
                    "girth is " + std::to_string(*girth));
            for (int len = static_cast<int>(c.P.size()); len <= next; ++len) {
                advance(c, v, len);
                advance(v, c, len);
            }
            built = next;
            if (!girth) {
                int64_t tr = 0;
                for (int64_t d : c.closed.at(next)) tr = cadd(tr, d);
                if (tr > 0) girth = next;
            }
        }
    }

    int64_t trace(const Tower& t, int two_k) const {
        int64_t tr = 0;
        for (int64_t d : t.closed.at(two_k)) tr = cadd(tr, d);
        return tr;
    }
};

WalkTables::WalkTables(const ParityCheckMatrix& h, int cap)
    : impl_(std::make_unique<Impl>(h)), cap_(cap) {
    if (cap < 4 || cap % 2 != 0)
        throw std::invalid_argument("search cap must be even and at least 4");
}

WalkTables::~WalkTables() = default;
WalkTables::WalkTables(WalkTables&&) noexcept = default;
WalkTables& WalkTables::operator=(WalkTables&&) noexcept = default;

int64_t WalkTables::total(int two_k) {
    impl_->ensure(two_k, cap_);
    // trace counts each cycle once per vertex of this side and direction
    return impl_->trace(impl_->c, two_k) / two_k;
}

int64_t WalkTables::total_from_vars(int two_k) {
    impl_->ensure(two_k, cap_);
    return impl_->trace(impl_->v, two_k) / two_k;
}

std::vector<int64_t> WalkTables::per_check(int two_k) {
    impl_->ensure(two_k, cap_);
    std::vector<int64_t> out = impl_->c.closed.at(two_k);
    for (auto& x : out) x /= 2;
    return out;
}

std::optional<int> WalkTables::girth_found() const { return impl_->girth; }

const IntMatrix& WalkTables::path_matrix_checks(int len) const { return impl_->c.P.at(len); }
const IntMatrix& WalkTables::path_matrix_vars(int len) const { return impl_->v.P.at(len); }

CycleCount count_cycles_of_length(const ParityCheckMatrix& h, int two_k, int cap) {
    WalkTables wt(h, cap);
    CycleCount out;
    out.total = wt.total(two_k);
    out.per_check = wt.per_check(two_k);
    return out;
}

CycleCensus census(const ParityCheckMatrix& h, int cap) {
    WalkTables wt(h, cap);
    CycleCensus out;
    out.cap = cap;
    out.m = h.m();
    for (int two_k = 4; two_k <= cap; two_k += 2) {
        int64_t t = wt.total(two_k);
        if (t > 0) {
            out.girth = two_k;
            out.total = t;
            out.per_check = wt.per_check(two_k);
            for (int64_t s : out.per_check) out.per_check_sum = cadd(out.per_check_sum, s);
            out.mu_g = static_cast<double>(out.per_check_sum) / h.m();
            break;
        }
    }
    return out;
}

CycleCount brute_force_cycle_oracle(const ParityCheckMatrix& h, int two_k) {
    if (h.m() + h.n() > 24)
        throw TooLarge("brute-force cycle enumeration limited to n+m <= 24");
    if (two_k < 4 || two_k % 2 != 0)
        throw std::invalid_argument("cycle length must be even and at least 4");

    const int m = h.m();
    const int total_nodes = m + h.n();
    std::vector<std::vector<int>> adj(total_nodes);
    for (int i = 0; i < m; ++i)
        for (int j : h.row(i)) {
            adj[i].push_back(m + j);
            adj[m + j].push_back(i);
        }

    CycleCount out;
    out.per_check.assign(m, 0);
    std::vector<int> path;
    path.reserve(two_k);

    // cycles are canonicalized by smallest vertex first and by the
    // direction with the smaller second vertex
    auto dfs = [&](auto&& self, int start, int v, uint32_t visited) -> void {
        for (int w : adj[v]) {
            if (static_cast<int>(path.size()) == two_k) {
                if (w == start && path[1] < path.back()) {
                    out.total = cadd(out.total, 1);
                    for (int u : path)
                        if (u < m) out.per_check[u] = cadd(out.per_check[u], 1);
                }
                continue;
            }
            if (w <= start || (visited & (1u << w))) continue;
            path.push_back(w);
            self(self, start, w, visited | (1u << w));
            path.pop_back();
        }
    };

    for (int s = 0; s < total_nodes; ++s) {
        path.assign(1, s);
        dfs(dfs, s, s, 1u << s);
    }
    return out;
}

}  // namespace vfap
