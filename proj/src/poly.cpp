#include "cslie/poly.hpp"

#include <stdexcept>

namespace cslie {

static void check_same_vars(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars != q.vars)
        throw std::invalid_argument("MultiPoly: operands declare different variables");
}

MultiPoly MultiPoly::constant(std::vector<std::string> names, const GaussRat& c) {
    MultiPoly p(std::move(names));
    if (!c.is_zero()) p.terms[std::vector<uint32_t>(p.vars.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> names, size_t index) {
    MultiPoly p(std::move(names));
    if (index >= p.vars.size()) throw std::out_of_range("MultiPoly: variable index");
    std::vector<uint32_t> e(p.vars.size(), 0);
    e[index] = 1;
    p.terms[e] = GaussRat(1);
    return p;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (uint32_t x : e) t += (int)x;
        if (t > d) d = t;
    }
    return d;
}

void MultiPoly::add_term(const std::vector<uint32_t>& expo, const GaussRat& c) {
    if (expo.size() != vars.size()) throw std::invalid_argument("MultiPoly: exponent length");
    if (c.is_zero()) return;
    auto it = terms.find(expo);
    if (it == terms.end()) {
        terms.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) {
    check_same_vars(p, q);
    MultiPoly r = p;
    for (const auto& [e, c] : q.terms) r.add_term(e, c);
    return r;
}

MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q) {
    check_same_vars(p, q);
    MultiPoly r = p;
    for (const auto& [e, c] : q.terms) r.add_term(e, -c);
    return r;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
    check_same_vars(p, q);
    MultiPoly r(p.vars);
    for (const auto& [e1, c1] : p.terms)
        for (const auto& [e2, c2] : q.terms) {
            std::vector<uint32_t> e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly poly_scale(const GaussRat& c, const MultiPoly& p) {
    MultiPoly r(p.vars);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : p.terms) r.terms[e] = c * v;
    return r;
}

GaussRat poly_eval(const MultiPoly& p, const std::vector<GaussRat>& assignment) {
    if (assignment.size() != p.vars.size())
        throw std::invalid_argument("MultiPoly: eval needs a value for every variable");
    GaussRat s;
    for (const auto& [e, c] : p.terms) {
        GaussRat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (uint32_t k = 0; k < e[i]; ++k) t *= assignment[i];
        s += t;
    }
    return s;
}

MultiPoly poly_substitute(const MultiPoly& p, size_t index, const GaussRat& value) {
    if (index >= p.vars.size()) throw std::out_of_range("poly_substitute: variable index");
    MultiPoly r(p.vars);
    for (const auto& [e, c] : p.terms) {
        GaussRat t = c;
        for (uint32_t k = 0; k < e[index]; ++k) t *= value;
        std::vector<uint32_t> e2 = e;
        e2[index] = 0;
        r.add_term(e2, t);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coef = c.str();
        std::string term;
        if (mono.empty())
            term = coef;
        else if (c.is_one())
            term = mono;
        else if ((-c).is_one())
            term = "-" + mono;
        else if (!c.is_real() || coef.find('+') != std::string::npos ||
                 coef.find('-', 1) != std::string::npos)
            term = "(" + coef + ")*" + mono;
        else
            term = coef + "*" + mono;
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out;
}

} // namespace cslie
