#include "facelat/exact.hpp"

#include <cctype>

#include "facelat/error.hpp"

namespace facelat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExactScalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  std::string canonical(text);
  if (!canonical.empty() && canonical.front() == '+') canonical.erase(0, 1);
  if (slash != std::string_view::npos) {
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  ExactScalar q(canonical, 10);
  q.canonicalize();
  return q;
}

std::string to_string(const ExactScalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const ExactScalar& value) { return sgn(value); }

ExactScalar dot(const ExactVector& a, const ExactVector& b) {
  ExactScalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const ExactVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

ExactVector scaled(const ExactVector& v, const ExactScalar& factor) {
  ExactVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * factor;
  return r;
}

ExactVector add(const ExactVector& a, const ExactVector& b) {
  ExactVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExactVector subtract(const ExactVector& a, const ExactVector& b) {
  ExactVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExactVector negated(const ExactVector& v) {
  ExactVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_integral(const ExactVector& v) {
  for (const auto& x : v) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

std::string to_string(const ExactVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace facelat
