#include "conductor/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "conductor/error.hpp"

namespace conductor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPrecondition: return "PreconditionError";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kNegativeUnipotentRank: return "NegativeUnipotentRank";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kNotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::kInvalidResolution: return "InvalidResolution";
    case ErrorCode::kInconsistentDims: return "InconsistentDims";
    case ErrorCode::kInvalidFiltration: return "InvalidFiltration";
    case ErrorCode::kInvalidCover: return "InvalidCover";
    case ErrorCode::kRHMismatch: return "RHMismatch";
    case ErrorCode::kNegativeSwan: return "NegativeSwan";
    case ErrorCode::kNegativeConductor: return "NegativeConductor";
    case ErrorCode::kMissingTerm: return "MissingTerm";
    case ErrorCode::kMissingOrdinaryData: return "MissingOrdinaryData";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kPrecondition, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  // U+2212 MINUS SIGN is accepted as an alias for '-'.
  std::string normalized(text);
  const std::string minus = "\xE2\x88\x92";
  for (auto pos = normalized.find(minus); pos != std::string::npos;
       pos = normalized.find(minus)) {
    normalized.replace(pos, minus.size(), "-");
  }
  std::string_view s = normalized;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) {
      throw Error(ErrorCode::kParseError,
                  "not a rational literal: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(s));
  }
  const auto num = s.substr(0, slash);
  const auto den = s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw Error(ErrorCode::kParseError,
                "not a rational literal: '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), d);
}

long Rational::to_long() const {
  if (!is_integer()) {
    throw Error(ErrorCode::kPrecondition, "value " + str() + " is not integral");
  }
  const Integer& n = q_.get_num();
  if (!n.fits_slong_p()) {
    throw Error(ErrorCode::kPrecondition, "value " + str() + " out of range");
  }
  return n.get_si();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::kPrecondition, "reciprocal of zero");
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kPrecondition, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace conductor
