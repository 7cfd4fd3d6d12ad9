#include "cluskein/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cluskein {

// ---------------------------------------------------------------- VarTable

VarTable::VarTable(std::vector<std::string> names, std::vector<bool> invertible)
    : names_(std::move(names)), invertible_(std::move(invertible)) {
    if (invertible_.size() != names_.size())
        throw Error("VarTable: invertible flags do not match variable count");
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty())
            throw Error("VarTable: empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw Error("VarTable: duplicate variable name '" + names_[i] + "'");
    }
    all_invertible_ = std::all_of(invertible_.begin(), invertible_.end(),
                                  [](bool b) { return b; });
}

std::shared_ptr<const VarTable> VarTable::ambient(
    std::vector<std::string> names) {
    std::vector<bool> inv(names.size(), true);
    return std::make_shared<const VarTable>(std::move(names), std::move(inv));
}

std::shared_ptr<const VarTable> VarTable::with_invertible(
    std::vector<std::string> names, std::vector<bool> invertible) {
    return std::make_shared<const VarTable>(std::move(names),
                                            std::move(invertible));
}

int VarTable::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        throw UnknownVariable("unknown variable '" + std::string(name) + "'");
    return it->second;
}

std::optional<int> VarTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ------------------------------------------------------------ GradedLexLess

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// -------------------------------------------------------------- LaurentPoly

namespace {

void require_same_table(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.table() == b.table()) return;  // shared instance
    if (a.table() && b.table() && *a.table() == *b.table()) return;
    throw TableMismatch("operands live over different variable tables");
}

}  // namespace

LaurentPoly::LaurentPoly(VarTablePtr table) : table_(std::move(table)) {
    if (!table_) throw Error("LaurentPoly: null variable table");
}

LaurentPoly LaurentPoly::zero(VarTablePtr table) {
    return LaurentPoly(std::move(table));
}

LaurentPoly LaurentPoly::constant(VarTablePtr table, Int value) {
    LaurentPoly p(std::move(table));
    if (value != 0)
        p.terms_.emplace(ExpVec(p.table_->size(), 0), std::move(value));
    return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr table, int index) {
    LaurentPoly p(std::move(table));
    if (index < 0 || index >= p.table_->size())
        throw UnknownVariable("variable index " + std::to_string(index) +
                              " out of range");
    ExpVec e(p.table_->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Int(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr table, ExpVec exponents,
                                  Int coefficient) {
    LaurentPoly p(std::move(table));
    if (static_cast<int>(exponents.size()) != p.table_->size())
        throw Error("monomial: exponent vector has wrong length");
    if (coefficient != 0)
        p.terms_.emplace(std::move(exponents), std::move(coefficient));
    p.check_invertibility();
    return p;
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 &&
           std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

const std::pair<const ExpVec, Int>& LaurentPoly::leading() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    if (table_ != other.table_ && !(*table_ == *other.table_)) return false;
    return terms_ == other.terms_;
}

void LaurentPoly::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    check_invertibility();
}

void LaurentPoly::check_invertibility() const {
    if (table_->all_invertible()) return;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
            if (e[i] < 0 && !table_->invertible(i))
                throw NonInvertible("negative exponent on non-invertible '" +
                                    table_->name(i) + "'");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(table_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
    require_same_table(*this, b);
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
    require_same_table(*this, b);
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r += b;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r -= b;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_table(a, b);
    LaurentPoly r(a.table());
    const int n = a.table()->size();
    ExpVec e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            Int c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    r.check_invertibility();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
    *this = *this * b;
    return *this;
}

LaurentPoly pow(const LaurentPoly& base, long exponent) {
    if (exponent == 0)
        return LaurentPoly::constant(base.table(), 1);
    if (exponent < 0) {
        if (!base.is_unit_monomial())
            throw NonInvertible(
                "negative power of a non-unit: " + base.to_string());
        const auto& [e, c] = *base.terms().begin();
        ExpVec inv(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            inv[i] = -e[i] * static_cast<int>(-exponent);
        // c is +-1, so c^exponent is c or 1 depending on parity
        Int coeff = (c == -1 && (exponent % 2 != 0)) ? Int(-1) : Int(1);
        return LaurentPoly::monomial(base.table(), std::move(inv), coeff);
    }
    LaurentPoly acc = LaurentPoly::constant(base.table(), 1);
    LaurentPoly sq = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) acc *= sq;
        e >>= 1;
        if (e > 0) sq *= sq;
    }
    return acc;
}

// ------------------------------------------------------------ exact_divide

namespace {

// Per-variable minimal exponent over all terms (0 for the zero poly).
ExpVec min_exponents(const TermMap& terms, int n) {
    ExpVec m(n, 0);
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < n; ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

TermMap shifted(const TermMap& terms, const ExpVec& shift) {
    TermMap out;
    const int n = static_cast<int>(shift.size());
    for (const auto& [e, c] : terms) {
        ExpVec s(n);
        for (int i = 0; i < n; ++i) s[i] = e[i] - shift[i];
        out.emplace(std::move(s), c);
    }
    return out;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    require_same_table(num, den);
    if (den.is_zero()) throw DivisionByZero("exact_divide: zero divisor");
    const VarTablePtr& table = num.table();
    const int n = table->size();

    if (num.is_zero()) return LaurentPoly::zero(table);

    // Monomial divisor: exponent subtraction, coefficient divisibility.
    if (den.is_monomial()) {
        const auto& [ed, cd] = *den.terms().begin();
        LaurentPoly result(table);
        for (const auto& [e, c] : num.terms()) {
            if (c % cd != 0)
                throw InexactDivision(
                    "coefficient " + c.str() + " not divisible by " + cd.str(),
                    num);
            ExpVec qe(n);
            for (int i = 0; i < n; ++i) qe[i] = e[i] - ed[i];
            result.terms_.emplace(std::move(qe), c / cd);
        }
        result.check_invertibility();
        return result;
    }

    // Shift both operands to ordinary polynomials, long-divide, shift back.
    ExpVec sn = min_exponents(num.terms(), n);
    ExpVec sd = min_exponents(den.terms(), n);
    TermMap r = shifted(num.terms(), sn);
    TermMap d = shifted(den.terms(), sd);
    const auto& [lead_d_exp, lead_d_coeff] = *d.rbegin();

    TermMap q;
    while (!r.empty()) {
        const auto& [lead_r_exp, lead_r_coeff] = *r.rbegin();
        ExpVec qe(n);
        bool divisible = true;
        for (int i = 0; i < n && divisible; ++i) {
            qe[i] = lead_r_exp[i] - lead_d_exp[i];
            if (qe[i] < 0) divisible = false;
        }
        if (!divisible || lead_r_coeff % lead_d_coeff != 0) {
            // Report the remainder in the original Laurent coordinates.
            LaurentPoly rem(table);
            for (const auto& [e, c] : r) {
                ExpVec back(n);
                for (int i = 0; i < n; ++i) back[i] = e[i] + sn[i];
                rem.terms_.emplace(std::move(back), c);
            }
            rem.check_invertibility();
            throw InexactDivision("inexact division, remainder " +
                                      rem.to_string(),
                                  rem);
        }
        Int qc = lead_r_coeff / lead_d_coeff;
        // r -= (qc * x^qe) * d
        for (const auto& [ed, cd2] : d) {
            ExpVec e(n);
            for (int i = 0; i < n; ++i) e[i] = qe[i] + ed[i];
            Int delta = qc * cd2;
            auto [it, inserted] = r.emplace(std::move(e), -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second == 0) r.erase(it);
            }
        }
        q.emplace(std::move(qe), std::move(qc));
    }

    LaurentPoly result(table);
    for (const auto& [e, c] : q) {
        ExpVec back(n);
        for (int i = 0; i < n; ++i) back[i] = e[i] + sn[i] - sd[i];
        result.terms_.emplace(std::move(back), c);
    }
    result.check_invertibility();
    return result;
}

// -------------------------------------------------------------- substitute

LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment) {
    const VarTablePtr& table = p.table();
    for (const auto& [idx, subst] : assignment) {
        if (idx < 0 || idx >= table->size())
            throw UnknownVariable("substitute: index " + std::to_string(idx) +
                                  " out of range");
        require_same_table(p, subst.image);
        if (subst.inverse) {
            require_same_table(p, *subst.inverse);
            if (!(subst.image * *subst.inverse).is_one())
                throw SubstitutionError(
                    "declared inverse of the image of '" + table->name(idx) +
                    "' is not an inverse");
        }
    }

    LaurentPoly acc = LaurentPoly::zero(table);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(table, c);
        ExpVec untouched(table->size(), 0);
        for (int i = 0; i < table->size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                untouched[i] = e[i];
                continue;
            }
            const SubstImage& s = it->second;
            if (e[i] > 0 || s.image.is_unit_monomial()) {
                term *= pow(s.image, e[i]);
            } else if (s.inverse) {
                term *= pow(*s.inverse, -static_cast<long>(e[i]));
            } else {
                throw SubstitutionError(
                    "non-unit substituted into negative exponent of '" +
                    table->name(i) + "' without a declared inverse");
            }
        }
        term *= LaurentPoly::monomial(table, std::move(untouched), 1);
        acc += term;
    }
    return acc;
}

// ---------------------------------------------------------------- display

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Largest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (int i = 0; i < static_cast<int>(e.size()); ++i) {
            if (e[i] == 0) continue;
            std::string f = table_->name(i);
            if (e[i] != 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            out << abs.str();
        } else {
            if (abs != 1) out << abs.str() << "*";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) out << "*";
                out << factors[i];
            }
        }
    }
    return out.str();
}

bool LaurentPoly::all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second > 0; });
}

}  // namespace cluskein
