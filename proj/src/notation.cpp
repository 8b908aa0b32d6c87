#include "cslie/notation.hpp"

#include <stdexcept>

namespace cslie {

namespace {

struct SalamonTerm {
    Rational coeff;
    int i, j; // normalized i < j
};

// One slot: "0" or a +/- separated sum of "[c·]ij" tokens.
std::vector<SalamonTerm> parse_slot(const std::string& tok, int slot) {
    std::vector<SalamonTerm> terms;
    std::string s;
    for (char ch : tok)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("salamon: empty slot " + std::to_string(slot));
    if (s == "0") return terms;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("salamon: expected sign in slot " + std::to_string(slot));
        }
        first = false;
        // optional rational coefficient followed by '·', '*' or juxtaposition
        size_t start = pos;
        while (pos < s.size() && (isdigit((unsigned char)s[pos]) || s[pos] == '/')) ++pos;
        std::string numtok = s.substr(start, pos - start);
        Rational coeff(1);
        bool have_sep = false;
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            have_sep = true;
        } else if (pos + 1 < s.size() && (unsigned char)s[pos] == 0xc2 &&
                   (unsigned char)s[pos + 1] == 0xb7) {
            pos += 2;
            have_sep = true;
        }
        int i = 0, j = 0;
        auto read_pair = [&](const std::string& digits) {
            if (digits.size() != 2)
                throw std::invalid_argument("salamon: malformed token in slot " +
                                            std::to_string(slot));
            i = digits[0] - '0';
            j = digits[1] - '0';
        };
        if (have_sep) {
            if (numtok.empty())
                throw std::invalid_argument("salamon: separator without coefficient in slot " +
                                            std::to_string(slot));
            coeff = Rational::parse(numtok);
            if (pos < s.size() && s[pos] == '{') {
                size_t close = s.find('}', pos);
                if (close == std::string::npos)
                    throw std::invalid_argument("salamon: unterminated '{'");
                std::string body = s.substr(pos + 1, close - pos - 1);
                size_t comma = body.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("salamon: '{i,j}' needs a comma");
                i = std::stoi(body.substr(0, comma));
                j = std::stoi(body.substr(comma + 1));
                pos = close + 1;
            } else {
                size_t st = pos;
                while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
                read_pair(s.substr(st, pos - st));
            }
        } else if (!numtok.empty()) {
            // Juxtaposed forms: "12" is a bare pair; "3/2 12" style is not
            // reachable without a separator, so a longer digit run means
            // "c" followed by "ij" — only unambiguous when it has length 2
            // (bare pair) or the coefficient is an integer prefix of length
            // n-2 would be ambiguous, so only "cij" with integer c is taken.
            if (numtok.find('/') != std::string::npos) {
                // "a/bij" without separator: split at last two digits
                if (numtok.size() < 3)
                    throw std::invalid_argument("salamon: malformed token '" + numtok + "'");
                read_pair(numtok.substr(numtok.size() - 2));
                coeff = Rational::parse(numtok.substr(0, numtok.size() - 2));
            } else if (numtok.size() == 2) {
                read_pair(numtok);
            } else if (numtok.size() > 2) {
                coeff = Rational::parse(numtok.substr(0, numtok.size() - 2));
                read_pair(numtok.substr(numtok.size() - 2));
            } else {
                throw std::invalid_argument("salamon: malformed token '" + numtok + "' in slot " +
                                            std::to_string(slot));
            }
        } else if (pos < s.size() && s[pos] == '{') {
            size_t close = s.find('}', pos);
            if (close == std::string::npos) throw std::invalid_argument("salamon: unterminated '{'");
            std::string body = s.substr(pos + 1, close - pos - 1);
            size_t comma = body.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("salamon: '{i,j}' needs a comma");
            i = std::stoi(body.substr(0, comma));
            j = std::stoi(body.substr(comma + 1));
            pos = close + 1;
        } else {
            throw std::invalid_argument("salamon: malformed slot " + std::to_string(slot));
        }
        if (i == j) throw std::invalid_argument("salamon: repeated index 'ii'");
        if (i > j) {
            std::swap(i, j);
            sign = -sign;
        }
        Rational c = (sign > 0) ? coeff : -coeff;
        terms.push_back({c, i, j});
    }
    return terms;
}

std::vector<std::vector<SalamonTerm>> parse_string(const std::string& s, int& dim) {
    size_t l = s.find('(');
    size_t r = s.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("salamon: expected '(...)'");
    std::string body = s.substr(l + 1, r - l - 1);
    std::vector<std::string> slots;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0;; ++i) {
        if (i == body.size()) {
            slots.push_back(body.substr(start, i - start));
            break;
        }
        char ch = body[i];
        if (ch == '{') {
            ++depth;
        } else if (ch == '}') {
            --depth;
        } else if (ch == ',' && depth == 0) {
            // commas inside '{...}' do not split slots
            slots.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    dim = (int)slots.size();
    std::vector<std::vector<SalamonTerm>> out;
    for (int k = 0; k < dim; ++k) {
        auto terms = parse_slot(slots[k], k + 1);
        for (const auto& t : terms)
            if (t.i > dim || t.j > dim)
                throw std::invalid_argument("salamon: index beyond dimension in slot " +
                                            std::to_string(k + 1));
        out.push_back(std::move(terms));
    }
    return out;
}

LieAlgebra algebra_from_slots(const std::vector<std::vector<SalamonTerm>>& slots, int dim,
                              int bracket_sign) {
    // de^k = sum c e^{ij}  and  d e^k (e_i,e_j) = -e^k([e_i,e_j])
    // so strict convention means e^k([e_i,e_j]) = -c; bracket convention +c.
    LieAlgebra g(dim);
    std::map<std::pair<int, int>, Vec> acc;
    for (int k = 0; k < dim; ++k)
        for (const auto& t : slots[k]) {
            auto key = std::make_pair(t.i, t.j);
            auto it = acc.find(key);
            if (it == acc.end()) it = acc.emplace(key, vec_zero(dim)).first;
            GaussRat c = GaussRat(t.coeff);
            it->second[k] += (bracket_sign > 0) ? c : -c;
        }
    for (auto& [ij, v] : acc) g.set_bracket(ij.first, ij.second, std::move(v));
    return g;
}

} // namespace

LieAlgebra parse_salamon_unchecked(const std::string& s, bool bracket_convention) {
    int dim = 0;
    auto slots = parse_string(s, dim);
    return algebra_from_slots(slots, dim, bracket_convention ? +1 : -1);
}

LieAlgebra parse_salamon(const std::string& s) {
    int dim = 0;
    auto slots = parse_string(s, dim);
    LieAlgebra g = algebra_from_slots(slots, dim, -1);
    auto rep = validate_jacobi(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw std::invalid_argument("salamon: Jacobi identity fails at triple (" +
                                    std::to_string(v.i) + "," + std::to_string(v.j) + "," +
                                    std::to_string(v.k) + ")");
    }
    return g;
}

LieAlgebra parse_salamon_brackets(const std::string& s) {
    int dim = 0;
    auto slots = parse_string(s, dim);
    LieAlgebra g = algebra_from_slots(slots, dim, +1);
    auto rep = validate_jacobi(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw std::invalid_argument("salamon: Jacobi identity fails at triple (" +
                                    std::to_string(v.i) + "," + std::to_string(v.j) + "," +
                                    std::to_string(v.k) + ")");
    }
    return g;
}

std::string print_salamon(const LieAlgebra& g) {
    for (const auto& [ij, v] : g.br)
        for (const auto& x : v)
            if (!x.is_real())
                throw std::invalid_argument("print_salamon: non-real structure constants");
    std::string out = "(";
    for (int k = 1; k <= g.dim; ++k) {
        if (k > 1) out += ",";
        // de^k = - sum_{i<j} c^k_{ij} e^{ij}
        std::string slot;
        for (const auto& [ij, v] : g.br) {
            Rational c = -v[k - 1].re;
            if (c.is_zero()) continue;
            std::string mono;
            if (ij.second > 9)
                mono = "{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "}";
            else
                mono = std::to_string(ij.first) + std::to_string(ij.second);
            std::string term;
            if (c.is_one())
                term = mono;
            else if ((-c).is_one())
                term = "-" + mono;
            else
                term = c.str() + "·" + mono;
            if (slot.empty())
                slot = term;
            else if (term[0] == '-')
                slot += term;
            else
                slot += "+" + term;
        }
        out += slot.empty() ? "0" : slot;
    }
    return out + ")";
}

void ComplexEqnSet::add_hol(int k, GaussRat c, int j, int l) {
    if (k < 1 || k > n || j < 1 || j > n || l < 1 || l > n)
        throw std::out_of_range("ComplexEqnSet: index");
    if (j >= l) throw std::invalid_argument("ComplexEqnSet: holomorphic term needs j < l");
    if (!c.is_zero()) hol[k - 1].push_back({c, j, l});
}

void ComplexEqnSet::add_mixed(int k, GaussRat c, int j, int l) {
    if (k < 1 || k > n || j < 1 || j > n || l < 1 || l > n)
        throw std::out_of_range("ComplexEqnSet: index");
    if (!c.is_zero()) mixed[k - 1].push_back({c, j, l});
}

std::vector<AltForm> realified_dphi(const ComplexEqnSet& eqs) {
    int dim = 2 * eqs.n;
    GaussRat I = GaussRat::unit_i();
    // phi^j = e^{2j-1} - i e^{2j} as a complex 1-form
    auto phi = [&](int j) {
        AltForm f(dim, 1);
        f.add_term(1ULL << (2 * j - 2), GaussRat(1));
        f.add_term(1ULL << (2 * j - 1), -I);
        return f;
    };
    auto phibar = [&](int j) {
        AltForm f(dim, 1);
        f.add_term(1ULL << (2 * j - 2), GaussRat(1));
        f.add_term(1ULL << (2 * j - 1), I);
        return f;
    };
    std::vector<AltForm> out;
    for (int k = 1; k <= eqs.n; ++k) {
        AltForm d(dim, 2);
        for (const auto& t : eqs.hol[k - 1])
            d = form_add(d, form_scale(t.coeff, wedge(phi(t.j), phi(t.l))));
        for (const auto& t : eqs.mixed[k - 1])
            d = form_add(d, form_scale(t.coeff, wedge(phi(t.j), phibar(t.l))));
        out.push_back(std::move(d));
    }
    return out;
}

Realification realify(const ComplexEqnSet& eqs) {
    if (eqs.n < 1) throw std::invalid_argument("realify: empty equation set");
    int dim = 2 * eqs.n;
    std::vector<AltForm> dphi = realified_dphi(eqs);
    // d e^{2k-1} = Re(dphi^k), d e^{2k} = -Im(dphi^k)
    std::vector<AltForm> de(dim, AltForm(dim, 2));
    for (int k = 1; k <= eqs.n; ++k) {
        de[2 * k - 2] = dphi[k - 1].re();
        de[2 * k - 1] = form_neg(dphi[k - 1].im());
    }
    LieAlgebra g(dim);
    std::map<std::pair<int, int>, Vec> acc;
    for (int k = 0; k < dim; ++k)
        for (const auto& [mask, v] : de[k].c) {
            auto idx = AltForm::indices_of(mask);
            auto key = std::make_pair(idx[0], idx[1]);
            auto it = acc.find(key);
            if (it == acc.end()) it = acc.emplace(key, vec_zero(dim)).first;
            it->second[k] -= v; // e^k([e_i,e_j]) = -(de^k)(e_i,e_j)
        }
    for (auto& [ij, v] : acc) g.set_bracket(ij.first, ij.second, std::move(v));
    auto rep = validate_jacobi(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw std::invalid_argument(
            "realify: d^2 != 0 (Jacobi fails at (" + std::to_string(v.i) + "," +
            std::to_string(v.j) + "," + std::to_string(v.k) + ") with residual " +
            vec_str(v.residual) + ")");
    }
    Mat J(dim, dim);
    for (int k = 1; k <= eqs.n; ++k) {
        // J e_{2k-1} = -e_{2k}, J e_{2k} = e_{2k-1}
        J.at(2 * k - 1, 2 * k - 2) = GaussRat(-1);
        J.at(2 * k - 2, 2 * k - 1) = GaussRat(1);
    }
    return Realification{std::move(g), std::move(J)};
}

} // namespace cslie
