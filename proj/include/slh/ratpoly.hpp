#pragma once

#include "slh/rational.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slh {

/// Closed interval [lo, hi] with rational endpoints.
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }
    static RatInterval point(const Rational& v) { return {v, v}; }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
    }
    friend bool operator==(const RatInterval& a, const RatInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Interval power with the even-power tightening (x^2 on [-1,2] is [0,4]).
inline RatInterval pow(const RatInterval& x, int k) {
    if (k == 0) return RatInterval::point(1);
    Rational lo_k, hi_k;
    mpz_class nl = x.lo.get_num(), dl = x.lo.get_den(), nh = x.hi.get_num(), dh = x.hi.get_den();
    mpz_pow_ui(nl.get_mpz_t(), nl.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(dl.get_mpz_t(), dl.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(nh.get_mpz_t(), nh.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(dh.get_mpz_t(), dh.get_mpz_t(), static_cast<unsigned long>(k));
    lo_k = Rational(nl, dl);
    hi_k = Rational(nh, dh);
    lo_k.canonicalize();
    hi_k.canonicalize();
    if (k % 2 == 1) return {lo_k, hi_k};
    if (x.lo >= 0) return {lo_k, hi_k};
    if (x.hi <= 0) return {hi_k, lo_k};
    return {0, std::max(lo_k, hi_k)};
}

/// Axis-aligned box; sides[i] is the range of vars[i].
struct BoxRegion {
    std::vector<std::string> vars;
    std::vector<RatInterval> sides;

    BoxRegion() = default;
    BoxRegion(std::vector<std::string> v, std::vector<RatInterval> s) : vars(std::move(v)), sides(std::move(s)) {
        if (vars.size() != sides.size()) throw std::invalid_argument("BoxRegion: vars/sides size mismatch");
    }
    std::size_t dim() const { return vars.size(); }
    const RatInterval& side(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return sides[i];
        throw std::invalid_argument("BoxRegion: unknown variable '" + name + "'");
    }
    bool contains(std::span<const Rational> point) const {
        if (point.size() != sides.size()) return false;
        for (std::size_t i = 0; i < sides.size(); ++i)
            if (!sides[i].contains(point[i])) return false;
        return true;
    }
};

using Monomial = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients over named variables.
///
/// Binary operations unify variable lists by name: the result uses the left
/// operand's ordering followed by any variables only the right operand has.
/// Constants carry an empty variable list and combine with anything.
class RatPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    RatPoly() = default;
    RatPoly(const Rational& c) {  // NOLINT: constants convert implicitly
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    RatPoly(long c) : RatPoly(Rational(c)) {}  // NOLINT

    static RatPoly variable(const std::string& name) {
        RatPoly r;
        r.vars_ = {name};
        r.terms_.emplace(Monomial{1}, Rational(1));
        return r;
    }

    static RatPoly from_terms(std::vector<std::string> vars, const TermMap& terms) {
        RatPoly r;
        r.vars_ = std::move(vars);
        check_unique(r.vars_);
        for (const auto& [m, c] : terms) {
            if (m.size() != r.vars_.size()) throw std::invalid_argument("RatPoly: exponent vector length mismatch");
            for (int e : m)
                if (e < 0) throw std::invalid_argument("RatPoly: negative exponent");
            if (c != 0) r.terms_[m] += c;
        }
        r.drop_zeros();
        return r;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool has_var(const std::string& name) const { return var_index(name) >= 0; }

    /// Same polynomial re-expressed over `vars`, which must contain every variable this one uses.
    RatPoly with_vars(const std::vector<std::string>& vars) const {
        check_unique(vars);
        std::vector<int> where(vars_.size(), -1);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(vars.begin(), vars.end(), vars_[i]);
            if (it != vars.end()) where[i] = static_cast<int>(it - vars.begin());
        }
        RatPoly r;
        r.vars_ = vars;
        for (const auto& [m, c] : terms_) {
            Monomial out(vars.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (where[i] < 0) throw std::invalid_argument("RatPoly::with_vars: variable '" + vars_[i] + "' dropped");
                out[static_cast<std::size_t>(where[i])] = m[i];
            }
            r.terms_.emplace(std::move(out), c);
        }
        return r;
    }

    /// Removes variables that occur in no term.
    RatPoly trimmed() const {
        std::vector<std::string> used;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            bool occurs = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
            if (occurs) used.push_back(vars_[i]);
        }
        return with_vars(used);
    }

    int degree(const std::string& name) const {
        int i = var_index(name);
        if (i < 0) return 0;
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(i)]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    /// Coefficient of the monomial given as (variable, exponent) pairs; absent variables have exponent 0.
    Rational coefficient(const std::vector<std::pair<std::string, int>>& powers) const {
        Monomial m(vars_.size(), 0);
        for (const auto& [name, e] : powers) {
            int i = var_index(name);
            if (i < 0) {
                if (e != 0) return 0;
                continue;
            }
            m[static_cast<std::size_t>(i)] = e;
        }
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    RatPoly& operator+=(const RatPoly& o) { return accumulate(o, 1); }
    RatPoly& operator-=(const RatPoly& o) { return accumulate(o, -1); }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator-(RatPoly a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        auto vars = union_vars(a.vars_, b.vars_);
        RatPoly x = a.with_vars(vars), y = b.with_vars(vars);
        RatPoly r;
        r.vars_ = vars;
        Monomial m(vars.size());
        for (const auto& [ma, ca] : x.terms_) {
            for (const auto& [mb, cb] : y.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.terms_[m] += ca * cb;
            }
        }
        r.drop_zeros();
        return r;
    }

    friend bool operator==(const RatPoly& a, const RatPoly& b) {
        auto vars = union_vars(a.vars_, b.vars_);
        return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
    }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    RatPoly pow(unsigned k) const {
        RatPoly result(1), base = *this;
        while (k > 0) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k > 0) base *= base;
        }
        return result;
    }

    /// Formal partial derivative. Throws for a variable not in the list.
    RatPoly derivative(const std::string& name) const {
        int i = var_index(name);
        if (i < 0) throw std::invalid_argument("RatPoly::derivative: unknown variable '" + name + "'");
        auto k = static_cast<std::size_t>(i);
        RatPoly r;
        r.vars_ = vars_;
        for (const auto& [m, c] : terms_) {
            if (m[k] == 0) continue;
            Monomial d = m;
            d[k] -= 1;
            r.terms_.emplace(std::move(d), c * m[k]);
        }
        return r;
    }

    /// Exact value at a point given in this polynomial's variable order.
    Rational eval(std::span<const Rational> point) const {
        if (point.size() != vars_.size())
            throw std::invalid_argument("RatPoly::eval: expected " + std::to_string(vars_.size()) + " coordinates, got " +
                                        std::to_string(point.size()));
        std::vector<std::vector<Rational>> powers(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) powers[i] = {Rational(1)};
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i) {
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * point[i]);
                if (m[i] > 0) t *= pw[static_cast<std::size_t>(m[i])];
            }
            sum += t;
        }
        return sum;
    }
    Rational eval(std::initializer_list<Rational> point) const {
        std::vector<Rational> v(point);
        return eval(std::span<const Rational>(v));
    }
    /// Value at a point given by name; every variable must be assigned.
    Rational eval(const std::map<std::string, Rational>& point) const {
        std::vector<Rational> v;
        v.reserve(vars_.size());
        for (const auto& name : vars_) {
            auto it = point.find(name);
            if (it == point.end()) throw std::invalid_argument("RatPoly::eval: no value for '" + name + "'");
            v.push_back(it->second);
        }
        return eval(std::span<const Rational>(v));
    }

    /// Substitutes a rational value for one variable and removes it from the list.
    RatPoly substitute(const std::string& name, const Rational& value) const {
        int i = var_index(name);
        if (i < 0) throw std::invalid_argument("RatPoly::substitute: unknown variable '" + name + "'");
        auto k = static_cast<std::size_t>(i);
        RatPoly r;
        r.vars_ = vars_;
        r.vars_.erase(r.vars_.begin() + i);
        std::vector<Rational> pw{Rational(1)};
        for (const auto& [m, c] : terms_) {
            while (static_cast<int>(pw.size()) <= m[k]) pw.push_back(pw.back() * value);
            Monomial out = m;
            out.erase(out.begin() + i);
            r.terms_[out] += c * pw[static_cast<std::size_t>(m[k])];
        }
        r.drop_zeros();
        return r;
    }

    /// Dense coefficients c[0..deg] of a polynomial in at most one variable.
    std::vector<Rational> univariate_coefficients() const {
        RatPoly t = trimmed();
        if (t.vars_.size() > 1) throw std::invalid_argument("RatPoly: polynomial is not univariate");
        std::vector<Rational> c(static_cast<std::size_t>(t.total_degree()) + 1, Rational(0));
        for (const auto& [m, v] : t.terms_) c[m.empty() ? 0 : static_cast<std::size_t>(m[0])] = v;
        return c;
    }

    static RatPoly from_univariate(const std::string& name, const std::vector<Rational>& coeffs) {
        TermMap t;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) t[Monomial{static_cast<int>(k)}] = coeffs[k];
        return from_terms({name}, t);
    }

    static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::vector<std::string> out = a;
        for (const auto& v : b)
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        return out;
    }

private:
    static void check_unique(const std::vector<std::string>& vars) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw std::invalid_argument("RatPoly: duplicate variable '" + vars[i] + "'");
    }

    RatPoly& accumulate(const RatPoly& o, int sign) {
        auto vars = union_vars(vars_, o.vars_);
        if (vars != vars_) *this = with_vars(vars);
        const RatPoly& y = (o.vars_ == vars) ? o : o.with_vars(vars);
        for (const auto& [m, c] : y.terms_) {
            auto& slot = terms_[m];
            if (sign > 0) slot += c;
            else slot -= c;
            if (slot == 0) terms_.erase(m);
        }
        return *this;
    }

    void drop_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0) it = terms_.erase(it);
            else ++it;
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

template <>
struct Lift<RatPoly> {
    static RatPoly from(const Rational& q) { return RatPoly(q); }
};

/// Evaluates `f` with each variable replaced by the matching entry of `args`
/// (in f's variable order). Works for any ring type T that Lift<T> supports,
/// including RatPoly itself (composition).
template <class T>
T evaluate_generic(const RatPoly& f, std::span<const T> args) {
    if (args.size() != f.vars().size()) throw std::invalid_argument("evaluate_generic: argument count mismatch");
    std::vector<std::vector<T>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) powers[i] = {lift<T>(1)};
    T sum = lift<T>(0);
    for (const auto& [m, c] : f.terms()) {
        T t = lift<T>(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * args[i]);
            t = t * pw[static_cast<std::size_t>(m[i])];
        }
        sum = sum + t;
    }
    return sum;
}

/// Replaces named variables by polynomials; unnamed variables are kept.
inline RatPoly compose(const RatPoly& f, const std::map<std::string, RatPoly>& replacements) {
    std::vector<RatPoly> args;
    args.reserve(f.vars().size());
    for (const auto& name : f.vars()) {
        auto it = replacements.find(name);
        args.push_back(it == replacements.end() ? RatPoly::variable(name) : it->second);
    }
    return evaluate_generic<RatPoly>(f, std::span<const RatPoly>(args));
}

/// Natural interval extension of `f` over `box` (variables matched by name).
inline RatInterval interval_eval(const RatPoly& f, const BoxRegion& box) {
    RatPoly g = f.with_vars(RatPoly::union_vars(box.vars, f.vars()));
    if (g.vars().size() != box.vars.size()) throw std::invalid_argument("interval_eval: box does not cover all variables");
    RatInterval sum = RatInterval::point(0);
    for (const auto& [m, c] : g.terms()) {
        RatInterval t = RatInterval::point(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t = t * pow(box.sides[i], m[i]);
        sum = sum + t;
    }
    return sum;
}

/// Line-oriented text form:
///   ratpoly <nvars> <name>...
///   <e_1> ... <e_n> <numerator> <denominator>     (one line per term, ascending exponent order)
///   end
inline void write_ratpoly(std::ostream& os, const RatPoly& f) {
    os << "ratpoly " << f.vars().size();
    for (const auto& v : f.vars()) os << ' ' << v;
    os << '\n';
    for (const auto& [m, c] : f.terms()) {
        for (int e : m) os << e << ' ';
        os << c.get_num().get_str() << ' ' << c.get_den().get_str() << '\n';
    }
    os << "end\n";
}

inline std::string to_text(const RatPoly& f) {
    std::ostringstream os;
    write_ratpoly(os, f);
    return os.str();
}

inline RatPoly read_ratpoly(std::istream& is) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("read_ratpoly: empty input");
    std::istringstream head(line);
    std::string tag;
    std::size_t n = 0;
    if (!(head >> tag >> n) || tag != "ratpoly") throw std::invalid_argument("read_ratpoly: bad header");
    std::vector<std::string> vars(n);
    for (auto& v : vars)
        if (!(head >> v)) throw std::invalid_argument("read_ratpoly: missing variable name");
    RatPoly::TermMap terms;
    while (true) {
        if (!next_line()) throw std::invalid_argument("read_ratpoly: missing 'end'");
        if (line.rfind("end", 0) == 0) break;
        std::istringstream row(line);
        Monomial m(n);
        for (auto& e : m)
            if (!(row >> e)) throw std::invalid_argument("read_ratpoly: bad exponent row");
        std::string num, den;
        if (!(row >> num >> den)) throw std::invalid_argument("read_ratpoly: bad coefficient");
        Rational c(mpz_class(num, 10), mpz_class(den, 10));
        c.canonicalize();
        terms[m] += c;
    }
    return RatPoly::from_terms(vars, terms);
}

/// Human-readable rendering, e.g. "29/36864 + 1/36*y^2".
inline std::string to_pretty(const RatPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += f.vars()[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) out += to_string(mag);
        else if (mag == 1) out += mono;
        else out += to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace slh
