#include "facelat/sign_vector.hpp"

#include <vector>

#include "facelat/error.hpp"

namespace facelat {

namespace {

void require_same_length(const SignVector& f, const SignVector& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "sign vectors of length " + std::to_string(f.size()) + " and " + std::to_string(g.size()));
  }
}

}  // namespace

char to_char(Sign s) {
  switch (s) {
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
  }
  return '?';
}

SignVector::SignVector(std::initializer_list<int> signs) : plus_(signs.size()), minus_(signs.size()) {
  std::size_t i = 0;
  for (int s : signs) {
    if (s > 0) plus_.set(i);
    if (s < 0) minus_.set(i);
    ++i;
  }
}

SignVector SignVector::all(std::size_t size, Sign s) {
  SignVector v(size);
  if (s == Sign::Plus) v.plus_.set_all();
  if (s == Sign::Minus) v.minus_.set_all();
  return v;
}

std::strong_ordering SignVector::operator<=>(const SignVector& o) const noexcept {
  if (size() != o.size()) return size() <=> o.size();
  const Bitset differ = (plus_ ^ o.plus_) | (minus_ ^ o.minus_);
  const std::size_t i = differ.find_first();
  if (i == Bitset::npos) return std::strong_ordering::equal;
  return static_cast<int>((*this)[i]) <=> static_cast<int>(o[i]);
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += to_char((*this)[i]);
  }
  return out + ")";
}

SignVector SignVector::parse(std::string_view text) {
  auto fail = [&]() { throw Error(ErrorKind::ParseError, "malformed sign vector '" + std::string(text) + "'"); };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Sign> signs;
  bool expect_sign = true;
  while (!body.empty()) {
    if (body.front() == ' ') {
      body.remove_prefix(1);
      continue;
    }
    if (!expect_sign) {
      if (body.front() != ',') fail();
      body.remove_prefix(1);
      expect_sign = true;
      continue;
    }
    if (body.front() == '+') {
      signs.push_back(Sign::Plus);
      body.remove_prefix(1);
    } else if (body.front() == '-') {
      signs.push_back(Sign::Minus);
      body.remove_prefix(1);
    } else if (body.front() == '0') {
      signs.push_back(Sign::Zero);
      body.remove_prefix(1);
    } else if (body.substr(0, 3) == "\xE2\x88\x92") {
      signs.push_back(Sign::Minus);
      body.remove_prefix(3);
    } else {
      fail();
    }
    expect_sign = false;
  }
  if (expect_sign && !signs.empty()) fail();
  SignVector v(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) v.set(i, signs[i]);
  return v;
}

SignVector opposite(const SignVector& f) { return SignVector(f.minus_, f.plus_); }

SignVector compose(const SignVector& f, const SignVector& g) {
  require_same_length(f, g);
  const Bitset fs = f.support();
  return SignVector(f.plus_ | (g.plus_ - fs), f.minus_ | (g.minus_ - fs));
}

SignVector reorient(const SignVector& f, const SignVector& g) {
  require_same_length(f, g);
  const Bitset gz = g.zero_set();
  return SignVector((f.plus_ - gz) | (f.minus_ & gz), (f.minus_ - gz) | (f.plus_ & gz));
}

HyperplaneSet separation(const SignVector& f, const SignVector& g) {
  require_same_length(f, g);
  return (f.plus_set() & g.minus_set()) | (f.minus_set() & g.plus_set());
}

bool is_face_of(const SignVector& f, const SignVector& g) {
  require_same_length(f, g);
  return f.plus_set().is_subset_of(g.plus_set()) && f.minus_set().is_subset_of(g.minus_set());
}

bool componentwise_geq(const SignVector& f, const SignVector& g) {
  require_same_length(f, g);
  // G <= F fails exactly where G is + and F is not, or F is - and G is not.
  return g.plus_set().is_subset_of(f.plus_set()) && f.minus_set().is_subset_of(g.minus_set());
}

}  // namespace facelat
