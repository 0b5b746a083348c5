#include "freedf/rational.hpp"

#include <cctype>

#include "freedf/error.hpp"

namespace freedf {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadSyntax: return "BadSyntax";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::BadTuple: return "BadTuple";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::NotInCategory: return "NotInCategory";
    case ErrorCode::NotInPoset: return "NotInPoset";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DenseTooLarge: return "DenseTooLarge";
    case ErrorCode::NotKernelRepresentable: return "NotKernelRepresentable";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::MissingLowerOrder: return "MissingLowerOrder";
    case ErrorCode::IncompleteRestriction: return "IncompleteRestriction";
    case ErrorCode::UnsupportedCategory: return "UnsupportedCategory";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::BadRational, "not a rational: \"" + std::string(whole) + "\"");
  }
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Integer exp = parse_signed_integer(text.substr(e + 1), text);
    if (!exp.fits_slong_p() || abs(exp) > 4096) {
      throw Error(ErrorCode::BadRational, "exponent out of range: \"" + std::string(text) + "\"");
    }
    exponent = exp.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    std::string_view frac = mantissa.substr(dot + 1);
    std::string_view whole = mantissa.substr(0, dot);
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  }
  if (!all_digits(digits)) {
    throw Error(ErrorCode::BadRational, "not a number: \"" + std::string(text) + "\"");
  }
  Rational value{Integer(digits, 10)};
  if (exponent > 0) value *= power(10, static_cast<unsigned>(exponent));
  if (exponent < 0) value /= power(10, static_cast<unsigned>(-exponent));
  if (negative) value = -value;
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text, bool allow_decimal) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::BadRational, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_signed_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(ErrorCode::BadRational, "bad denominator in \"" + std::string(text) + "\"");
    }
    Integer den(std::string(den_text), 10);
    if (den == 0) {
      throw Error(ErrorCode::BadRational, "zero denominator in \"" + std::string(text) + "\"");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  if (allow_decimal && text.find_first_of(".eE") != std::string_view::npos) {
    return parse_decimal(text);
  }
  return Rational(parse_signed_integer(text, text));
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

Integer power(long base, unsigned exponent) {
  Integer result;
  Integer b(base);
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exponent);
  return result;
}

Integer falling_factorial(long n, long k) {
  if (k > n) return 0;
  Integer result = 1;
  for (long j = 0; j < k; ++j) result *= (n - j);
  return result;
}

Integer factorial(long k) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

}  // namespace freedf
