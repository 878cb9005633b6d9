#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "sqleq/errors.hpp"

namespace sqleq {

enum class Dtype { Integer, Real, Text, Boolean };

inline const char* dtype_name(Dtype t) {
    switch (t) {
        case Dtype::Integer: return "integer";
        case Dtype::Real: return "real";
        case Dtype::Text: return "text";
        case Dtype::Boolean: return "boolean";
    }
    return "?";
}

/// SQL predicate logic over {false, unknown, true}.
enum class Truth { False, Unknown, True };

inline Truth truth_not(Truth t) {
    if (t == Truth::True) return Truth::False;
    if (t == Truth::False) return Truth::True;
    return Truth::Unknown;
}

inline Truth truth_and(Truth a, Truth b) {
    if (a == Truth::False || b == Truth::False) return Truth::False;
    if (a == Truth::True && b == Truth::True) return Truth::True;
    return Truth::Unknown;
}

inline Truth truth_or(Truth a, Truth b) {
    if (a == Truth::True || b == Truth::True) return Truth::True;
    if (a == Truth::False && b == Truth::False) return Truth::False;
    return Truth::Unknown;
}

/// One SQL value: NULL or a typed scalar. Immutable once constructed.
class Value {
public:
    Value() : v_(std::monostate{}) {}

    static Value null() { return Value(); }
    static Value integer(std::int64_t i) { return Value(Repr(i)); }
    static Value real(double d) { return Value(Repr(d)); }
    static Value text(std::string s) { return Value(Repr(std::move(s))); }
    static Value boolean(bool b) { return Value(Repr(b)); }

    bool is_null() const { return std::holds_alternative<std::monostate>(v_); }
    bool is_integer() const { return std::holds_alternative<std::int64_t>(v_); }
    bool is_real() const { return std::holds_alternative<double>(v_); }
    bool is_text() const { return std::holds_alternative<std::string>(v_); }
    bool is_boolean() const { return std::holds_alternative<bool>(v_); }
    bool is_numeric() const { return is_integer() || is_real(); }

    std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
    double as_real() const { return std::get<double>(v_); }
    const std::string& as_text() const { return std::get<std::string>(v_); }
    bool as_boolean() const { return std::get<bool>(v_); }

    /// Numeric view, coercing integers to real.
    double numeric() const {
        if (is_integer()) return static_cast<double>(as_integer());
        return as_real();
    }

    bool conforms_to(Dtype t) const {
        if (is_null()) return true;
        switch (t) {
            case Dtype::Integer: return is_integer();
            case Dtype::Real: return is_real() || is_integer();
            case Dtype::Text: return is_text();
            case Dtype::Boolean: return is_boolean();
        }
        return false;
    }

    /// Truth view of a predicate result: NULL is unknown, otherwise the
    /// value must be boolean.
    Truth truth() const {
        if (is_null()) return Truth::Unknown;
        if (is_boolean()) return as_boolean() ? Truth::True : Truth::False;
        throw EngineError(EngineErrorKind::TypeMismatch,
                          "expected a boolean predicate, got " + describe());
    }

    static Value from_truth(Truth t) {
        if (t == Truth::Unknown) return null();
        return boolean(t == Truth::True);
    }

    std::string describe() const {
        if (is_null()) return "NULL";
        if (is_integer()) return std::to_string(as_integer());
        if (is_real()) {
            std::ostringstream os;
            os << as_real();
            return os.str();
        }
        if (is_boolean()) return as_boolean() ? "TRUE" : "FALSE";
        return "'" + as_text() + "'";
    }

private:
    using Repr = std::variant<std::monostate, std::int64_t, double, std::string, bool>;
    explicit Value(Repr v) : v_(std::move(v)) {}
    Repr v_;
};

inline std::string fold_case(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

/// Three-way comparison of two non-NULL values. Integers coerce to real when
/// mixed; text folds case when `fold_text` is set. Returns nothing when either
/// side is NULL (comparison is unknown) and throws on incompatible types.
inline std::optional<int> compare_values(const Value& a, const Value& b, bool fold_text) {
    if (a.is_null() || b.is_null()) return std::nullopt;
    if (a.is_numeric() && b.is_numeric()) {
        if (a.is_integer() && b.is_integer()) {
            auto x = a.as_integer(), y = b.as_integer();
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        double x = a.numeric(), y = b.numeric();
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    if (a.is_text() && b.is_text()) {
        if (fold_text) {
            std::string x = fold_case(a.as_text()), y = fold_case(b.as_text());
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        const auto& x = a.as_text();
        const auto& y = b.as_text();
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    if (a.is_boolean() && b.is_boolean()) {
        int x = a.as_boolean() ? 1 : 0, y = b.as_boolean() ? 1 : 0;
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    throw EngineError(EngineErrorKind::TypeMismatch,
                      "cannot compare " + a.describe() + " with " + b.describe());
}

/// Equality used by DISTINCT, GROUP BY, set operations and bag comparison:
/// NULLs compare equal to each other, numerics coerce, booleans coerce to
/// integers, text folds per `fold_text`. Never throws; values of unrelated
/// types are simply distinct.
inline bool values_identical(const Value& a, const Value& b, bool fold_text) {
    if (a.is_null() || b.is_null()) return a.is_null() && b.is_null();
    auto norm = [](const Value& v) -> Value {
        if (v.is_boolean()) return Value::integer(v.as_boolean() ? 1 : 0);
        return v;
    };
    Value x = norm(a), y = norm(b);
    if (x.is_numeric() && y.is_numeric()) return x.numeric() == y.numeric();
    if (x.is_text() && y.is_text())
        return fold_text ? fold_case(x.as_text()) == fold_case(y.as_text())
                         : x.as_text() == y.as_text();
    return false;
}

/// Stable string key for grouping and multiset counting, consistent with
/// values_identical.
inline std::string value_key(const Value& v, bool fold_text) {
    if (v.is_null()) return "n";
    if (v.is_boolean()) return "i:" + std::to_string(v.as_boolean() ? 1 : 0);
    if (v.is_integer()) return "i:" + std::to_string(v.as_integer());
    if (v.is_real()) {
        double d = v.as_real();
        if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9.2e18)
            return "i:" + std::to_string(static_cast<std::int64_t>(d));
        std::ostringstream os;
        os.precision(17);
        os << d;
        return "r:" + os.str();
    }
    return "t:" + (fold_text ? fold_case(v.as_text()) : v.as_text());
}

}  // namespace sqleq
