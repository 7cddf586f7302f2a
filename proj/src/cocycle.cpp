#include "scext/cocycle.hpp"

#include "scext/fusion_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace scext {

namespace {

int mod(std::int64_t x, int m) {
    std::int64_t r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

// ---------------------------------------------------------------- group

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) orders_.push_back(1);
    size_ = 1;
    for (int o : orders_) {
        if (o < 1) throw InputError("cyclic factor orders must be positive");
        size_ *= o;
        if (size_ > 4096) throw InputError("group too large");
    }
    add_.resize(static_cast<std::size_t>(size_) * size_);
    neg_.resize(size_);
    for (int a = 0; a < size_; ++a) {
        auto ea = element(a);
        std::vector<int> na(ea.size());
        for (std::size_t t = 0; t < ea.size(); ++t) na[t] = mod(-ea[t], orders_[t]);
        neg_[a] = index(na);
        for (int b = 0; b < size_; ++b) {
            auto eb = element(b);
            std::vector<int> s(ea.size());
            for (std::size_t t = 0; t < ea.size(); ++t) s[t] = (ea[t] + eb[t]) % orders_[t];
            add_[a * size_ + b] = index(s);
        }
    }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find_first_of("xX*", pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.size() < 2 || tok[0] != 'Z' ||
            !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw InputError("cannot parse group '" + text + "' (expected e.g. Z4 or Z2xZ2)");
        }
        orders.push_back(std::stoi(tok.substr(1)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return FiniteAbelianGroup(orders);
}

std::vector<int> FiniteAbelianGroup::element(int index) const {
    std::vector<int> e(orders_.size());
    for (std::size_t t = orders_.size(); t-- > 0;) {
        e[t] = index % orders_[t];
        index /= orders_[t];
    }
    return e;
}

int FiniteAbelianGroup::index(const std::vector<int>& components) const {
    if (components.size() != orders_.size()) {
        throw InputError("element has " + std::to_string(components.size()) +
                         " components, group " + name() + " needs " +
                         std::to_string(orders_.size()));
    }
    int idx = 0;
    for (std::size_t t = 0; t < orders_.size(); ++t) idx = idx * orders_[t] + mod(components[t], orders_[t]);
    return idx;
}

int FiniteAbelianGroup::multiple(std::int64_t n, int a) const {
    auto e = element(a);
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = mod(n % orders_[t] * e[t], orders_[t]);
    return index(e);
}

int FiniteAbelianGroup::order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = add(x, a)) ++k;
    return k;
}

std::string FiniteAbelianGroup::element_string(int index) const {
    auto e = element(index);
    if (e.size() == 1) return std::to_string(e[0]);
    std::string s = "(";
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(e[t]);
    }
    return s + ")";
}

int FiniteAbelianGroup::parse_element(const std::string& text) const {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') s += ch;
    }
    std::vector<int> comps;
    std::size_t pos = 0;
    try {
        while (true) {
            std::size_t next = s.find(',', pos);
            comps.push_back(std::stoi(s.substr(pos, next - pos)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } catch (const std::exception&) {
        throw InputError("cannot parse group element '" + text + "'");
    }
    bool in_range = comps.size() == orders_.size();
    for (std::size_t t = 0; in_range && t < comps.size(); ++t) {
        in_range = comps[t] >= 0 && comps[t] < orders_[t];
    }
    if (!in_range) throw InputError("'" + text + "' is not an element of " + name());
    return index(comps);
}

std::string FiniteAbelianGroup::name() const {
    std::string s;
    for (std::size_t t = 0; t < orders_.size(); ++t) {
        if (t) s += "xZ";
        else s += "Z";
        s += std::to_string(orders_[t]);
    }
    return s;
}

// ---------------------------------------------------------------- cocycles

AbelianCocycle AbelianCocycle::trivial(const FiniteAbelianGroup& g, int m) {
    AbelianCocycle c;
    c.group = g;
    c.m = m;
    const std::size_t n = g.size();
    c.F.assign(n * n * n, 0);
    c.Omega.assign(n * n, 0);
    return c;
}

AbelianCocycle AbelianCocycle::rescaled(int m_new) const {
    if (m_new % m != 0) throw InputError("rescaled: new value order must be a multiple of m");
    const int s = m_new / m;
    AbelianCocycle c = *this;
    c.m = m_new;
    for (auto& x : c.F) x *= s;
    for (auto& x : c.Omega) x *= s;
    return c;
}

bool CocycleReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

CocycleReport verify(const AbelianCocycle& c) {
    const int n = c.n();
    const int m = c.m;
    CocycleReport rep;
    auto fail = [](IdentityCheck& chk, std::vector<int> where) {
        if (chk.ok) {
            chk.ok = false;
            chk.counterexample = std::move(where);
        }
    };

    IdentityCheck shape{"shape", true, {}};
    if (m < 1 || c.F.size() != static_cast<std::size_t>(n) * n * n ||
        c.Omega.size() != static_cast<std::size_t>(n) * n) {
        shape.ok = false;
        rep.checks.push_back(shape);
        return rep;
    }
    rep.checks.push_back(shape);

    const auto& G = c.group;
    IdentityCheck norm{"normalization", true, {}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if ((i == 0 || j == 0) && mod(c.omega(i, j), m) != 0) fail(norm, {i, j});
            for (int k = 0; k < n; ++k) {
                if ((i == 0 || j == 0 || k == 0) && mod(c.f(i, j, k), m) != 0) fail(norm, {i, j, k});
            }
        }
    }
    rep.checks.push_back(norm);

    IdentityCheck pent{"pentagon", true, {}};
    for (int i = 0; i < n && pent.ok; ++i)
        for (int j = 0; j < n && pent.ok; ++j)
            for (int k = 0; k < n && pent.ok; ++k)
                for (int l = 0; l < n; ++l) {
                    std::int64_t lhs = c.f(i, j, k) + c.f(i, G.add(j, k), l) + c.f(j, k, l);
                    std::int64_t rhs = c.f(G.add(i, j), k, l) + c.f(i, j, G.add(k, l));
                    if (mod(lhs - rhs, m) != 0) {
                        fail(pent, {i, j, k, l});
                        break;
                    }
                }
    rep.checks.push_back(pent);

    IdentityCheck hex1{"hexagon1", true, {}};
    IdentityCheck hex2{"hexagon2", true, {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::int64_t l1 = -c.f(i, j, k) + c.omega(i, G.add(j, k)) - c.f(j, k, i);
                std::int64_t r1 = c.omega(i, j) - c.f(j, i, k) + c.omega(i, k);
                if (mod(l1 - r1, m) != 0) fail(hex1, {i, j, k});
                std::int64_t l2 = c.f(i, j, k) + c.omega(G.add(i, j), k) + c.f(k, i, j);
                std::int64_t r2 = c.omega(j, k) + c.f(i, k, j) + c.omega(i, k);
                if (mod(l2 - r2, m) != 0) fail(hex2, {i, j, k});
            }
    rep.checks.push_back(hex1);
    rep.checks.push_back(hex2);
    return rep;
}

// ---------------------------------------------------------------- enumeration
//
// The cocycle conditions are linear in the exponents, so the solutions form
// the kernel of an integer matrix A reduced mod m. Diagonalizing A = U D W^{-1}
// over Z turns A x = 0 (mod m) into d_t y_t = 0 (mod m) with x = W y, which
// splits the kernel into cyclic generators.

namespace {

struct Generator {
    std::vector<std::pair<int, int>> f;      // (table position, increment)
    std::vector<std::pair<int, int>> omega;  // (table position, increment)
    int order = 1;
};

struct KernelBasis {
    std::vector<Generator> gens;
    std::uint64_t count = 1;
};

void check_guard(const FiniteAbelianGroup& g, int m) {
    if (g.size() > 4 || m > 8 || m < 1) {
        throw InputError("size guard exceeded: enumeration needs |G| <= 4 and 1 <= m <= 8 (got |G| = " +
                         std::to_string(g.size()) + ", m = " + std::to_string(m) + ")");
    }
}

KernelBasis kernel_basis(const FiniteAbelianGroup& G, int m) {
    const int n = G.size();
    std::vector<int> f_var(n * n * n, -1), om_var(n * n, -1);
    std::vector<int> var_pos;  // unknown -> table position
    std::vector<bool> var_is_f;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) {
                f_var[(i * n + j) * n + k] = static_cast<int>(var_pos.size());
                var_pos.push_back((i * n + j) * n + k);
                var_is_f.push_back(true);
            }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            om_var[i * n + j] = static_cast<int>(var_pos.size());
            var_pos.push_back(i * n + j);
            var_is_f.push_back(false);
        }
    const int cols = static_cast<int>(var_pos.size());
    if (cols == 0) return {};

    using Row = std::vector<Integer>;
    std::vector<Row> rows;
    std::map<std::vector<int>, bool> seen;
    auto emit = [&](const std::vector<std::pair<int, int>>& terms) {
        std::vector<int> r(cols, 0);
        for (auto [v, coef] : terms) {
            if (v >= 0) r[v] += coef;
        }
        if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return;
        if (!seen.emplace(r, true).second) return;
        rows.emplace_back(r.begin(), r.end());
    };
    auto F = [&](int i, int j, int k) { return f_var[(i * n + j) * n + k]; };
    auto O = [&](int i, int j) { return om_var[i * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    emit({{F(i, j, k), 1}, {F(i, G.add(j, k), l), 1}, {F(j, k, l), 1},
                          {F(G.add(i, j), k, l), -1}, {F(i, j, G.add(k, l)), -1}});
                }
                emit({{F(i, j, k), -1}, {O(i, G.add(j, k)), 1}, {F(j, k, i), -1},
                      {O(i, j), -1}, {F(j, i, k), 1}, {O(i, k), -1}});
                emit({{F(i, j, k), 1}, {O(G.add(i, j), k), 1}, {F(k, i, j), 1},
                      {O(j, k), -1}, {F(i, k, j), -1}, {O(i, k), -1}});
            }

    // Diagonalize, tracking column operations in W.
    std::vector<Row> W(cols, Row(cols, 0));
    for (int t = 0; t < cols; ++t) W[t][t] = 1;
    const int nrows = static_cast<int>(rows.size());
    auto col_axpy = [&](int dst, int src, const Integer& q) {  // col_dst -= q col_src
        for (int r = 0; r < nrows; ++r) rows[r][dst] -= q * rows[r][src];
        for (int r = 0; r < cols; ++r) W[r][dst] -= q * W[r][src];
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (auto& r : rows) std::swap(r[a], r[b]);
        for (auto& r : W) std::swap(r[a], r[b]);
    };
    std::vector<Integer> diag;
    int t = 0;
    for (; t < std::min(nrows, cols); ++t) {
        while (true) {
            int pr = -1, pc = -1;
            for (int r = t; r < nrows; ++r)
                for (int c = t; c < cols; ++c) {
                    if (rows[r][c] != 0 &&
                        (pr < 0 || abs(rows[r][c]) < abs(rows[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) break;
            std::swap(rows[t], rows[pr]);
            col_swap(t, pc);
            bool clean = true;
            const Integer p = rows[t][t];
            for (int r = t + 1; r < nrows; ++r) {
                if (rows[r][t] == 0) continue;
                Integer q = rows[r][t] / p;
                for (int c = t; c < cols; ++c) rows[r][c] -= q * rows[t][c];
                if (rows[r][t] != 0) clean = false;
            }
            for (int c = t + 1; c < cols; ++c) {
                if (rows[t][c] == 0) continue;
                col_axpy(c, t, rows[t][c] / p);
                if (rows[t][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (t >= nrows || rows[t][t] == 0) break;
        diag.push_back(rows[t][t]);
    }

    KernelBasis kb;
    for (int c = 0; c < cols; ++c) {
        int g = m;  // number of solutions of d y = 0 mod m
        if (c < static_cast<int>(diag.size())) {
            Integer d = abs(diag[c]);
            g = static_cast<int>(gcd(d, Integer(m)));
        }
        if (g == 1) continue;
        const int step = m / g;
        Generator gen;
        gen.order = g;
        for (int r = 0; r < cols; ++r) {
            int v = static_cast<int>(Integer(W[r][c] * step) % m);
            v = mod(v, m);
            if (v == 0) continue;
            (var_is_f[r] ? gen.f : gen.omega).emplace_back(var_pos[r], v);
        }
        kb.count *= static_cast<std::uint64_t>(g);
        kb.gens.push_back(std::move(gen));
    }
    return kb;
}

}  // namespace

std::uint64_t count_cocycles(const FiniteAbelianGroup& g, int m) {
    check_guard(g, m);
    return kernel_basis(g, m).count;
}

void for_each_cocycle(const FiniteAbelianGroup& g, int m,
                      const std::function<void(const AbelianCocycle&)>& visit) {
    check_guard(g, m);
    KernelBasis kb = kernel_basis(g, m);
    AbelianCocycle c = AbelianCocycle::trivial(g, m);
    std::vector<int> digits(kb.gens.size(), 0);
    while (true) {
        visit(c);
        std::size_t t = 0;
        for (; t < kb.gens.size(); ++t) {
            const Generator& gen = kb.gens[t];
            for (auto [pos, v] : gen.f) c.F[pos] = (c.F[pos] + v) % m;
            for (auto [pos, v] : gen.omega) c.Omega[pos] = (c.Omega[pos] + v) % m;
            // order * generator = 0, so a wrapped digit restores the table
            if (++digits[t] < gen.order) break;
            digits[t] = 0;
        }
        if (t == kb.gens.size()) return;
    }
}

std::vector<AbelianCocycle> enumerate(const FiniteAbelianGroup& g, int m, std::uint64_t max_results) {
    const std::uint64_t count = count_cocycles(g, m);
    if (count > max_results) {
        throw InputError("size guard exceeded: " + std::to_string(count) +
                         " cocycles, more than the list limit " + std::to_string(max_results) +
                         "; iterate with for_each_cocycle instead");
    }
    std::vector<AbelianCocycle> out;
    out.reserve(count);
    for_each_cocycle(g, m, [&](const AbelianCocycle& c) { out.push_back(c); });
    return out;
}

bool key_identity_Z2(const AbelianCocycle& c) {
    if (!(c.group == FiniteAbelianGroup::cyclic(2))) {
        throw InputError("key_identity_Z2 needs the group Z2, got " + c.group.name());
    }
    return mod(c.f(1, 1, 1) - 2 * c.omega(1, 1), c.m) == 0;
}

QuadraticForm quadratic_form(const AbelianCocycle& c) {
    const int n = c.n();
    const auto& G = c.group;
    QuadraticForm qf;
    auto B = [&](int i, int j) { return c.omega(i, j) + c.omega(j, i); };
    auto q = [&](int i) { return c.omega(i, i); };
    for (int i = 0; i < n; ++i) {
        qf.q.push_back(Phase(q(i), c.m));
        for (int j = 0; j < n; ++j) qf.B.push_back(Phase(B(i, j), c.m));
    }
    auto el = [&](int i) { return G.element_string(i); };
    for (int i = 0; i < n; ++i) {
        if (mod(q(G.neg(i)) - q(i), c.m) != 0) {
            qf.violations.push_back("q(-" + el(i) + ") != q(" + el(i) + ")");
        }
        for (int j = 0; j < n; ++j) {
            if (mod(q(G.add(i, j)) - q(i) - q(j) - B(i, j), c.m) != 0) {
                qf.violations.push_back("q(i+j) != q(i)q(j)B(i,j) at (" + el(i) + ", " + el(j) + ")");
            }
            for (int k = 0; k < n; ++k) {
                if (mod(B(G.add(i, j), k) - B(i, k) - B(j, k), c.m) != 0) {
                    qf.violations.push_back("B not bimultiplicative at (" + el(i) + ", " + el(j) +
                                            ", " + el(k) + ")");
                }
            }
        }
    }
    return qf;
}

MonodromyTable monodromy_table(const AbelianCocycle& c) {
    MonodromyTable t{c.group, c.m, std::vector<int>(c.Omega.size())};
    const int n = c.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.M[a * n + b] = mod(c.omega(a, b) + c.omega(b, a), c.m);
    return t;
}

bool SuiteReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.ok; });
}

SuiteReport monodromy_theorem_suite(const MonodromyTable& t) {
    const auto& G = t.group;
    const int n = G.size();
    auto triv = [&](int a, int b) { return mod(t.at(a, b), t.m) == 0; };
    auto same = [&](int a, int b, int c, int d) { return mod(t.at(a, b) - t.at(c, d), t.m) == 0; };

    SuiteReport rep;
    auto item = [&](const std::string& name) -> SuiteItem& {
        rep.items.push_back({name, true, 0, {}});
        return rep.items.back();
    };
    auto record = [](SuiteItem& it, bool holds, std::vector<int> where) {
        ++it.instances;
        if (!holds && it.ok) {
            it.ok = false;
            it.counterexample = std::move(where);
        }
    };

    {
        SuiteItem& it = item("(1) M(a,c)=1 => M(a,b+c)=M(a,b)");
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (triv(a, c))
                    for (int b = 0; b < n; ++b) record(it, same(a, G.add(b, c), a, b), {a, b, c});
    }
    {
        SuiteItem& it = item("(1) M(a,c)=1 => M(a+b,c)=M(b,c)");
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (triv(a, c))
                    for (int b = 0; b < n; ++b) record(it, same(G.add(a, b), c, b, c), {a, b, c});
    }
    {
        SuiteItem& it = item("(2) M(j,x)=M(y,x)=1 => M(y+ij,x)=1");
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x)
                if (triv(j, x))
                    for (int y = 0; y < n; ++y)
                        if (triv(y, x))
                            for (int i = 1, yi = G.add(y, j); i <= G.order(j); ++i, yi = G.add(yi, j))
                                record(it, triv(yi, x), {j, x, y, i});
    }
    {
        SuiteItem& it = item("(3) M(x,j)=M(x,y)=1 => M(x,ij+y)=1");
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x)
                if (triv(x, j))
                    for (int y = 0; y < n; ++y)
                        if (triv(x, y))
                            for (int i = 1, yi = G.add(y, j); i <= G.order(j); ++i, yi = G.add(yi, j))
                                record(it, triv(x, yi), {j, x, y, i});
    }
    auto powers = [&](int j, bool integers) {
        std::vector<std::pair<int, int>> out;  // (exponent, element)
        const int o = G.order(j);
        for (int i = integers ? -o : 0; i <= o; ++i) out.emplace_back(i, G.multiple(i, j));
        return out;
    };
    for (bool integers : {false, true}) {
        SuiteItem& it = item(integers ? "(7) M(j,j)=1 => M(ij,i'j)=1, i,i' in Z"
                                      : "(4) M(j,j)=1 => M(ij,i'j)=1, i,i' >= 0");
        for (int j = 0; j < n; ++j) {
            if (!triv(j, j)) continue;
            auto ps = powers(j, integers);
            for (auto [i, a] : ps)
                for (auto [i2, b] : ps) record(it, triv(a, b), {j, i, i2});
        }
    }
    for (bool integers : {false, true}) {
        SuiteItem& it = item(integers ? "(8) M(j,j)=M(j,x)=1 => M(ij,i'j+x)=1, i,i' in Z"
                                      : "(5) M(j,j)=M(j,x)=1 => M(ij,i'j+x)=1, i,i' >= 0");
        for (int j = 0; j < n; ++j) {
            if (!triv(j, j)) continue;
            auto ps = powers(j, integers);
            for (int x = 0; x < n; ++x) {
                if (!triv(j, x)) continue;
                for (auto [i, a] : ps)
                    for (auto [i2, b] : ps) record(it, triv(a, G.add(b, x)), {j, x, i, i2});
            }
        }
    }
    {
        SuiteItem& it = item("(6) M(j,x)=1 => M(-j,x)=1 and M(x,j)=1 => M(x,-j)=1");
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x) {
                if (triv(j, x)) record(it, triv(G.neg(j), x), {j, x});
                if (triv(x, j)) record(it, triv(x, G.neg(j)), {x, j});
            }
    }
    {
        SuiteItem& it = item("order: M(j,x)^N = 1, N the order of j");
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x)
                record(it, mod(static_cast<std::int64_t>(G.order(j)) * t.at(j, x), t.m) == 0, {j, x});
    }
    return rep;
}

SuiteReport monodromy_theorem_suite(const AbelianCocycle& c) {
    return monodromy_theorem_suite(monodromy_table(c));
}

bool pullback_check(const AbelianCocycle& c) {
    const auto& G = c.group;
    const int n = G.size();
    std::vector<int> H;
    for (int g = 0; g < n; ++g) {
        int h = G.add(g, g);
        if (std::find(H.begin(), H.end(), h) == H.end()) H.push_back(h);
    }
    for (int h : H) {
        if (h == 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int ih = G.add(i, h), jh = G.add(j, h);
                if (c.omega(ih, j) != c.omega(i, j) || c.omega(i, jh) != c.omega(i, j)) return false;
                for (int k = 0; k < n; ++k) {
                    const int v = c.f(i, j, k);
                    if (c.f(ih, j, k) != v || c.f(i, jh, k) != v || c.f(i, j, G.add(k, h)) != v) {
                        return false;
                    }
                }
            }
    }
    return true;
}

AbelianCocycle apply_coboundary(const AbelianCocycle& c, const Cochain& b, int m_b) {
    const int n = c.n();
    if (b.size() != static_cast<std::size_t>(n) * n) throw InputError("cochain has the wrong size");
    const int L = std::lcm(c.m, m_b);
    const int sb = L / m_b;
    AbelianCocycle out = c.rescaled(L);
    const auto& G = c.group;
    auto B = [&](int i, int j) { return b[i * n + j] * sb; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.omega(i, j) = mod(out.omega(i, j) + B(i, j) - B(j, i), L);
            for (int k = 0; k < n; ++k) {
                out.f(i, j, k) = mod(out.f(i, j, k) + B(j, k) + B(i, G.add(j, k)) -
                                         B(G.add(i, j), k) - B(i, j),
                                     L);
            }
        }
    return out;
}

std::optional<Cochain> coboundary_equivalent(const AbelianCocycle& c1, const AbelianCocycle& c2, int m) {
    if (!(c1.group == c2.group)) throw InputError("cocycles live on different groups");
    const auto& G = c1.group;
    const int n = G.size();
    if (n > 3 || m > 8 || m < 1) {
        throw InputError("size guard exceeded: coboundary search needs |G| <= 3 and 1 <= m <= 8");
    }
    const int L = std::lcm(std::lcm(c1.m, c2.m), m);
    const AbelianCocycle target = c2.rescaled(L);
    std::vector<int> free;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) free.push_back(i * n + j);
    Cochain b(n * n, 0);
    while (true) {
        if (apply_coboundary(c1.rescaled(L), b, m) == target) return b;
        std::size_t t = 0;
        for (; t < free.size(); ++t) {
            if (++b[free[t]] < m) break;
            b[free[t]] = 0;
        }
        if (t == free.size()) return std::nullopt;
    }
}

// ---------------------------------------------------------------- json

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

nlohmann::json to_json(const AbelianCocycle& c) {
    const auto& G = c.group;
    const int n = c.n();
    nlohmann::json F = nlohmann::json::object(), O = nlohmann::json::object();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (mod(c.omega(i, j), c.m) != 0) {
                O[G.element_string(i) + "," + G.element_string(j)] = c.omega_phase(i, j).to_string();
            }
            for (int k = 0; k < n; ++k) {
                if (mod(c.f(i, j, k), c.m) != 0) {
                    F[G.element_string(i) + "," + G.element_string(j) + "," + G.element_string(k)] =
                        c.f_phase(i, j, k).to_string();
                }
            }
        }
    return {{"group", G.name()}, {"m", c.m}, {"F", F}, {"Omega", O}};
}

AbelianCocycle cocycle_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("group")) throw InputError("cocycle: missing field 'group'");
        FiniteAbelianGroup G = FiniteAbelianGroup::parse(j.at("group").get<std::string>());
        const int n = G.size();
        struct Entry {
            std::vector<int> args;
            Phase value;
        };
        std::vector<Entry> fs, os;
        auto read = [&](const char* key, std::size_t arity, std::vector<Entry>& out) {
            if (!j.contains(key)) return;
            for (const auto& [k, v] : j.at(key).items()) {
                auto parts = split_top_level(k);
                if (parts.size() != arity) {
                    throw InputError(std::string("cocycle: key '") + k + "' of " + key + " needs " +
                                     std::to_string(arity) + " arguments");
                }
                Entry e;
                for (const auto& p : parts) e.args.push_back(G.parse_element(p));
                e.value = v.is_string() ? Phase::parse(v.get<std::string>())
                                        : Phase(Rational(v.get<std::int64_t>()));
                out.push_back(std::move(e));
            }
        };
        read("F", 3, fs);
        read("Omega", 2, os);
        Integer L = 1;
        for (const auto* list : {&fs, &os})
            for (const auto& e : *list) L = lcm(L, e.value.value().denominator());
        int m = static_cast<int>(L);
        if (j.contains("m")) {
            m = j.at("m").get<int>();
            if (m < 1 || m % static_cast<int>(L) != 0) {
                throw InputError("cocycle: values are not all " + std::to_string(m) + "-th roots of unity");
            }
        }
        AbelianCocycle c = AbelianCocycle::trivial(G, m);
        auto expo = [&](const Phase& p) {
            return static_cast<int>(p.value().numerator() * (m / p.value().denominator()));
        };
        for (const auto& e : fs) c.F[(e.args[0] * n + e.args[1]) * n + e.args[2]] = expo(e.value);
        for (const auto& e : os) c.Omega[e.args[0] * n + e.args[1]] = expo(e.value);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("cocycle document: ") + e.what());
    }
}

}  // namespace scext
