#include "cslie/altform.hpp"

#include <bit>
#include <stdexcept>

namespace cslie {

uint64_t AltForm::mask_of(const std::vector<int>& indices) {
    uint64_t m = 0;
    for (int i : indices) {
        if (i < 1 || i > 64) throw std::out_of_range("AltForm: index out of range");
        uint64_t bit = 1ULL << (i - 1);
        if (m & bit) throw std::invalid_argument("AltForm: repeated index");
        m |= bit;
    }
    return m;
}

std::vector<int> AltForm::indices_of(uint64_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
        if (mask & (1ULL << i)) v.push_back(i + 1);
    return v;
}

AltForm AltForm::basis(int dim, const std::vector<int>& indices) {
    AltForm f(dim, (int)indices.size());
    for (size_t i = 1; i < indices.size(); ++i)
        if (indices[i] <= indices[i - 1])
            throw std::invalid_argument("AltForm::basis: indices must increase");
    for (int i : indices)
        if (i > dim) throw std::out_of_range("AltForm::basis: index beyond dim");
    f.c[mask_of(indices)] = GaussRat(1);
    return f;
}

GaussRat AltForm::coeff(uint64_t mask) const {
    auto it = c.find(mask);
    return it == c.end() ? GaussRat(0) : it->second;
}

void AltForm::add_term(uint64_t mask, const GaussRat& v) {
    if (v.is_zero()) return;
    if (std::popcount(mask) != degree) throw std::invalid_argument("AltForm: degree mismatch");
    auto it = c.find(mask);
    if (it == c.end()) {
        c.emplace(mask, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

AltForm AltForm::re() const {
    AltForm f(dim, degree);
    for (const auto& [m, v] : c)
        if (!v.re.is_zero()) f.c[m] = GaussRat(v.re);
    return f;
}

AltForm AltForm::im() const {
    AltForm f(dim, degree);
    for (const auto& [m, v] : c)
        if (!v.im.is_zero()) f.c[m] = GaussRat(v.im);
    return f;
}

AltForm AltForm::conj() const {
    AltForm f(dim, degree);
    for (const auto& [m, v] : c) f.c[m] = v.conj();
    return f;
}

AltForm form_add(const AltForm& a, const AltForm& b) {
    if (a.dim != b.dim || a.degree != b.degree)
        throw std::invalid_argument("form_add: shape mismatch");
    AltForm r = a;
    for (const auto& [m, v] : b.c) r.add_term(m, v);
    return r;
}

AltForm form_sub(const AltForm& a, const AltForm& b) { return form_add(a, form_neg(b)); }

AltForm form_scale(const GaussRat& s, const AltForm& a) {
    AltForm r(a.dim, a.degree);
    if (s.is_zero()) return r;
    for (const auto& [m, v] : a.c) r.c[m] = s * v;
    return r;
}

AltForm form_neg(const AltForm& a) {
    AltForm r(a.dim, a.degree);
    for (const auto& [m, v] : a.c) r.c[m] = -v;
    return r;
}

// Parity of the shuffle merging two disjoint masks: counts pairs (a,b) with
// a in `ma`, b in `mb`, a > b.
static int shuffle_sign(uint64_t ma, uint64_t mb) {
    int inversions = 0;
    uint64_t rest = mb;
    while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(ma >> (b + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
    if (a.dim != b.dim) throw std::invalid_argument("wedge: ambient dim mismatch");
    AltForm r(a.dim, a.degree + b.degree);
    if (r.degree > a.dim) return r;
    for (const auto& [ma, va] : a.c)
        for (const auto& [mb, vb] : b.c) {
            if (ma & mb) continue;
            GaussRat v = va * vb;
            if (shuffle_sign(ma, mb) < 0) v = -v;
            r.add_term(ma | mb, v);
        }
    return r;
}

AltForm wedge_power(const AltForm& a, int n) {
    if (n < 0) throw std::invalid_argument("wedge_power: negative power");
    AltForm r(a.dim, 0);
    r.c[0] = GaussRat(1);
    for (int i = 0; i < n; ++i) r = wedge(r, a);
    return r;
}

AltForm contract(const Vec& x, const AltForm& a) {
    if ((int)x.size() != a.dim) throw std::invalid_argument("contract: dim mismatch");
    if (a.degree == 0) throw std::invalid_argument("contract: degree 0 form");
    AltForm r(a.dim, a.degree - 1);
    for (const auto& [m, v] : a.c) {
        uint64_t rest = m;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (x[i].is_zero()) continue;
            // position of bit i inside m (0-based)
            int pos = std::popcount(m & ((1ULL << i) - 1));
            GaussRat t = x[i] * v;
            if (pos & 1) t = -t;
            r.add_term(m & ~(1ULL << i), t);
        }
    }
    return r;
}

GaussRat form_eval(const AltForm& a, const std::vector<Vec>& args) {
    if ((int)args.size() != a.degree) throw std::invalid_argument("form_eval: arity");
    AltForm cur = a;
    for (const Vec& x : args) {
        if (cur.degree == 0) break;
        cur = contract(x, cur);
    }
    return cur.degree == 0 ? cur.coeff((uint64_t)0) : GaussRat(0);
}

AltForm pullback(const Mat& P, const AltForm& a) {
    if (P.rows != a.dim || P.cols != P.rows)
        throw std::invalid_argument("pullback: need square matrix of ambient dim");
    AltForm r(a.dim, a.degree);
    if (a.degree == 0) return a;
    // (P*a) coefficients: evaluate a on image columns for every increasing tuple.
    std::vector<int> idx(a.degree);
    std::vector<Vec> cols;
    for (int j = 0; j < a.dim; ++j) cols.push_back(P.col(j));
    // iterate increasing tuples via bitmasks of popcount == degree
    for (uint64_t m = 0; m < (1ULL << a.dim); ++m) {
        if (std::popcount(m) != a.degree) continue;
        std::vector<Vec> args;
        for (int i : AltForm::indices_of(m)) args.push_back(cols[i - 1]);
        GaussRat v = form_eval(a, args);
        r.add_term(m, v);
    }
    return r;
}

Mat gram_of_2form(const AltForm& a) {
    if (a.degree != 2) throw std::invalid_argument("gram_of_2form: degree != 2");
    Mat m(a.dim, a.dim);
    for (const auto& [mask, v] : a.c) {
        auto idx = AltForm::indices_of(mask);
        m.at(idx[0] - 1, idx[1] - 1) = v;
        m.at(idx[1] - 1, idx[0] - 1) = -v;
    }
    return m;
}

AltForm two_form_of_gram(const Mat& m) {
    AltForm f(m.rows, 2);
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j) f.add_term((1ULL << i) | (1ULL << j), m.at(i, j));
    return f;
}

GaussRat pfaffian(const AltForm& a) {
    if (a.degree != 2) throw std::invalid_argument("pfaffian: degree != 2");
    if (a.dim % 2 != 0) throw std::invalid_argument("pfaffian: odd ambient dimension");
    int n = a.dim / 2;
    AltForm top = wedge_power(a, n);
    GaussRat coef = top.coeff((a.dim == 64) ? ~0ULL : ((1ULL << a.dim) - 1));
    GaussRat fact(1);
    for (int k = 2; k <= n; ++k) fact *= GaussRat(k);
    return coef / fact;
}

// Expansion along the first live row: Pf(M) = sum_j (-1)^j M[0][j] Pf(M w/o 0,j).
static GaussRat pf_rec(const Mat& m, std::vector<int>& live) {
    if (live.empty()) return GaussRat(1);
    int i = live[0];
    GaussRat s;
    int sign = 1;
    for (size_t jj = 1; jj < live.size(); ++jj) {
        int j = live[jj];
        const GaussRat& v = m.at(i, j);
        if (!v.is_zero()) {
            std::vector<int> rest;
            rest.reserve(live.size() - 2);
            for (size_t k = 1; k < live.size(); ++k)
                if (k != jj) rest.push_back(live[k]);
            GaussRat sub = pf_rec(m, rest);
            if (!sub.is_zero()) s += (sign > 0 ? v : -v) * sub;
        }
        sign = -sign;
    }
    return s;
}

GaussRat pfaffian_matrix(const Mat& skew) {
    if (skew.rows != skew.cols) throw std::invalid_argument("pfaffian_matrix: not square");
    if (skew.rows % 2 != 0) throw std::invalid_argument("pfaffian_matrix: odd dimension");
    std::vector<int> live(skew.rows);
    for (int i = 0; i < skew.rows; ++i) live[i] = i;
    return pf_rec(skew, live);
}

Vec sharp(const AltForm& a, const Vec& alpha) {
    if (a.degree != 2) throw std::invalid_argument("sharp: degree != 2");
    if ((int)alpha.size() != a.dim) throw std::invalid_argument("sharp: dim mismatch");
    // a(X, e_j) = sum_i x_i a(e_i, e_j) = (G^T x)_j = -(G x)_j with G the gram.
    Mat g = gram_of_2form(a);
    Mat neg = mat_scale(GaussRat(-1), g);
    auto x = solve(neg, alpha);
    if (!x) throw std::domain_error("sharp: form is degenerate");
    // degenerate forms can still be solvable for special alpha; insist on Pf != 0
    if (pfaffian(a).is_zero()) throw std::domain_error("sharp: form is degenerate");
    return *x;
}

static MultiPoly pf_poly_rec(const std::vector<std::vector<MultiPoly>>& m,
                             std::vector<int>& live,
                             const std::vector<std::string>& vars) {
    if (live.empty()) return MultiPoly::constant(vars, GaussRat(1));
    MultiPoly s(vars);
    int i = live[0];
    int sign = 1;
    for (size_t jj = 1; jj < live.size(); ++jj) {
        int j = live[jj];
        const MultiPoly& v = m[i][j];
        if (!v.is_zero()) {
            std::vector<int> rest;
            for (size_t k = 1; k < live.size(); ++k)
                if (k != jj) rest.push_back(live[k]);
            MultiPoly sub = pf_poly_rec(m, rest, vars);
            MultiPoly term = poly_mul(v, sub);
            s = (sign > 0) ? poly_add(s, term) : poly_sub(s, term);
        }
        sign = -sign;
    }
    return s;
}

MultiPoly pfaffian_poly(const std::vector<AltForm>& basis,
                        const std::vector<std::string>& vars) {
    if (basis.size() != vars.size())
        throw std::invalid_argument("pfaffian_poly: one variable per form");
    if (basis.empty()) throw std::invalid_argument("pfaffian_poly: empty basis");
    int dim = basis[0].dim;
    if (dim % 2 != 0) throw std::invalid_argument("pfaffian_poly: odd ambient dimension");
    for (const AltForm& f : basis)
        if (f.dim != dim || f.degree != 2)
            throw std::invalid_argument("pfaffian_poly: forms must be 2-forms of equal dim");
    std::vector<std::vector<MultiPoly>> m(dim, std::vector<MultiPoly>(dim, MultiPoly(vars)));
    for (size_t k = 0; k < basis.size(); ++k) {
        for (const auto& [mask, v] : basis[k].c) {
            auto idx = AltForm::indices_of(mask);
            MultiPoly t = poly_scale(v, MultiPoly::variable(vars, k));
            m[idx[0] - 1][idx[1] - 1] = poly_add(m[idx[0] - 1][idx[1] - 1], t);
            m[idx[1] - 1][idx[0] - 1] = poly_sub(m[idx[1] - 1][idx[0] - 1], t);
        }
    }
    std::vector<int> live(dim);
    for (int i = 0; i < dim; ++i) live[i] = i;
    return pf_poly_rec(m, live, vars);
}

Endo::Endo(Mat mat) : dim(mat.rows), m(std::move(mat)) {
    if (m.rows != m.cols) throw std::invalid_argument("Endo: matrix must be square");
}

Endo Endo::zero(int dim) { return Endo(Mat(dim, dim)); }
Endo Endo::identity(int dim) { return Endo(Mat::identity(dim)); }

AltForm endo_dot_form(const Endo& d, const AltForm& rho) {
    if (rho.degree != 2) throw std::invalid_argument("endo_dot_form: need a 2-form");
    if (d.dim != rho.dim) throw std::invalid_argument("endo_dot_form: dim mismatch");
    // gram of (D.rho) is D^T G + G D
    Mat g = gram_of_2form(rho);
    Mat out = mat_add(mat_mul(d.m.transpose(), g), mat_mul(g, d.m));
    return two_form_of_gram(out);
}

Endo endo_bracket_map(const Endo& xi1, const Endo& xi2, const Endo& eta1, const Endo& eta2) {
    if (xi1.dim != xi2.dim || xi1.dim != eta1.dim || xi1.dim != eta2.dim)
        throw std::invalid_argument("endo_bracket_map: dim mismatch");
    return Endo(mat_sub(mat_mul(xi1.m, eta2.m), mat_mul(xi2.m, eta1.m)));
}

Vec covector_compose(const Vec& alpha, const Endo& d) {
    Vec r(d.dim);
    for (int j = 0; j < d.dim; ++j) {
        GaussRat s;
        for (int i = 0; i < d.dim; ++i)
            if (!alpha[i].is_zero() && !d.m.at(i, j).is_zero()) s += alpha[i] * d.m.at(i, j);
        r[j] = s;
    }
    return r;
}

// ---- text format ----------------------------------------------------------

std::string AltForm::str() const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, v] : c) {
        auto idx = indices_of(m);
        bool braces = !idx.empty() && idx.back() > 9;
        std::string mono = "e";
        if (braces) {
            mono += "{";
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i) mono += ",";
                mono += std::to_string(idx[i]);
            }
            mono += "}";
        } else {
            for (int i : idx) mono += std::to_string(i);
        }
        std::string term;
        if (v.is_one())
            term = mono;
        else if ((-v).is_one())
            term = "-" + mono;
        else {
            std::string s = v.str();
            bool needs_parens = !v.is_real() || s.find('+') != std::string::npos ||
                                s.find('-', 1) != std::string::npos;
            term = (needs_parens ? "(" + s + ")" : s) + "·" + mono;
        }
        if (first) {
            out = term;
            first = false;
        } else if (term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out;
}

namespace {

struct FormParser {
    const std::string& s;
    size_t pos = 0;

    explicit FormParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char ch) {
        skip_ws();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_sep() {
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            return true;
        }
        // UTF-8 middle dot
        if (pos + 1 < s.size() && (unsigned char)s[pos] == 0xc2 && (unsigned char)s[pos + 1] == 0xb7) {
            pos += 2;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("form: " + msg + " at position " + std::to_string(pos) +
                                    " in '" + s + "'");
    }
};

} // namespace

AltForm AltForm::parse(const std::string& text, int dim, int want_degree) {
    FormParser p(text);
    AltForm out(dim, -1);
    p.skip_ws();
    if (p.pos >= text.size()) p.fail("empty form");
    // whole-form "0"
    {
        size_t save = p.pos;
        if (p.eat('0')) {
            p.skip_ws();
            if (p.pos == text.size()) {
                out.degree = want_degree < 0 ? 0 : want_degree;
                return out;
            }
        }
        p.pos = save;
    }
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= text.size()) break;
        int sign = 1;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            p.fail("expected '+' or '-'");
        }
        p.skip_ws();
        // optional scalar coefficient up to the separator or 'e'
        GaussRat coef(1);
        if (p.pos < text.size() && text[p.pos] != 'e') {
            size_t start = p.pos;
            int depth = 0;
            while (p.pos < text.size()) {
                char ch = text[p.pos];
                if (ch == '(') ++depth;
                if (ch == ')') --depth;
                if (depth == 0 && (ch == 'e' || ch == '*' ||
                                   ((unsigned char)ch == 0xc2 && p.pos + 1 < text.size() &&
                                    (unsigned char)text[p.pos + 1] == 0xb7)))
                    break;
                ++p.pos;
            }
            std::string tok = text.substr(start, p.pos - start);
            // strip parens
            auto strip = [](std::string t) {
                while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
                while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
                if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
                    t = t.substr(1, t.size() - 2);
                return t;
            };
            tok = strip(tok);
            if (!tok.empty()) coef = GaussRat::parse(tok);
            p.eat_sep();
        }
        p.skip_ws();
        if (p.pos >= text.size() || text[p.pos] != 'e') p.fail("expected basis monomial 'e...'");
        ++p.pos;
        std::vector<int> idx;
        if (p.pos < text.size() && text[p.pos] == '{') {
            ++p.pos;
            while (true) {
                p.skip_ws();
                size_t st = p.pos;
                while (p.pos < text.size() && isdigit((unsigned char)text[p.pos])) ++p.pos;
                if (st == p.pos) p.fail("expected index");
                idx.push_back(std::stoi(text.substr(st, p.pos - st)));
                if (p.eat(',')) continue;
                if (p.eat('}')) break;
                p.fail("expected ',' or '}'");
            }
        } else {
            size_t st = p.pos;
            while (p.pos < text.size() && isdigit((unsigned char)text[p.pos])) ++p.pos;
            if (st == p.pos) p.fail("expected digit indices");
            for (size_t q = st; q < p.pos; ++q) idx.push_back(text[q] - '0');
        }
        // normalize tuple order, tracking the permutation sign
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) p.fail("repeated index in monomial");
                if (idx[a] > idx[b]) {
                    std::swap(idx[a], idx[b]);
                    sign = -sign;
                }
            }
        for (int i : idx) {
            if (i < 1) p.fail("index must be positive");
            if (i > dim) p.fail("index beyond ambient dimension");
        }
        if (out.degree < 0)
            out.degree = (int)idx.size();
        else if (out.degree != (int)idx.size())
            p.fail("mixed degrees in one form");
        GaussRat v = (sign > 0) ? coef : -coef;
        out.add_term(mask_of(idx), v);
        first = false;
    }
    if (out.degree < 0) out.degree = want_degree < 0 ? 0 : want_degree;
    if (want_degree >= 0 && out.degree != want_degree && !out.is_zero())
        throw std::invalid_argument("form: degree " + std::to_string(out.degree) +
                                    " where " + std::to_string(want_degree) + " expected");
    return out;
}

} // namespace cslie
