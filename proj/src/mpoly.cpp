#include "cudlab/mpoly.hpp"

#include <algorithm>
#include <set>

#include "cudlab/errors.hpp"

namespace cudlab {

MPoly::MPoly(std::vector<std::string> markers) : markers_(std::move(markers))
{
  std::set<std::string> unique(markers_.begin(), markers_.end());
  if (unique.size() != markers_.size())
    throw DomainError("polynomial ring has repeated marker names");
}

MPoly::MPoly(std::vector<std::string> markers, const Rational& constant)
    : MPoly(std::move(markers))
{
  set_coefficient(Exponents(markers_.size(), 0), constant);
}

MPoly MPoly::variable(std::vector<std::string> markers, std::string_view name)
{
  MPoly p(std::move(markers));
  Exponents e(p.markers_.size(), 0);
  e[p.index_of(name)] = 1;
  p.terms_[e] = 1;
  return p;
}

std::size_t MPoly::index_of(std::string_view name) const
{
  auto it = std::find(markers_.begin(), markers_.end(), name);
  if (it == markers_.end())
    throw UnknownName("marker '" + std::string(name) + "' is not in the ring");
  return static_cast<std::size_t>(it - markers_.begin());
}

bool MPoly::is_constant() const
{
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned k) { return k == 0; }));
}

Rational MPoly::constant_term() const
{
  return coefficient(Exponents(markers_.size(), 0));
}

Rational MPoly::coefficient(const Exponents& e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::set_coefficient(const Exponents& e, const Rational& value)
{
  if (e.size() != markers_.size())
    throw DomainError("exponent vector does not match the ring");
  if (value == 0)
    terms_.erase(e);
  else
    terms_[e] = value;
}

unsigned MPoly::degree_in(std::string_view name) const
{
  const auto i = index_of(name);
  unsigned d = 0;
  for (const auto& [e, _] : terms_)
    d = std::max(d, e[i]);
  return d;
}

void MPoly::require_same_ring(const MPoly& other) const
{
  if (markers_ != other.markers_)
    throw DomainError("polynomial ring mismatch");
}

MPoly& MPoly::operator+=(const MPoly& rhs)
{
  require_same_ring(rhs);
  for (const auto& [e, v] : rhs.terms_) {
    auto& slot = terms_[e];
    slot += v;
    if (slot == 0)
      terms_.erase(e);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs)
{
  require_same_ring(rhs);
  for (const auto& [e, v] : rhs.terms_) {
    auto& slot = terms_[e];
    slot -= v;
    if (slot == 0)
      terms_.erase(e);
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
  a.require_same_ring(b);
  MPoly out(a.markers_);
  MPoly::Exponents e(a.markers_.size());
  for (const auto& [ea, va] : a.terms_) {
    for (const auto& [eb, vb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      out.terms_[e] += va * vb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs)
{
  *this = *this * rhs;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& k)
{
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_)
    v *= k;
  return *this;
}

MPoly& MPoly::operator/=(const Rational& k)
{
  if (k == 0)
    throw DomainError("division of a polynomial by zero");
  for (auto& [_, v] : terms_)
    v /= k;
  return *this;
}

MPoly MPoly::operator-() const
{
  MPoly out = *this;
  for (auto& [_, v] : out.terms_)
    v = -v;
  return out;
}

bool operator==(const MPoly& a, const MPoly& b)
{
  return a.markers_ == b.markers_ && a.terms_ == b.terms_;
}

MPoly MPoly::substitute(const std::vector<std::string>& target,
                        const std::map<std::string, MPoly>& values) const
{
  std::vector<const MPoly*> images;
  for (const auto& m : markers_) {
    auto it = values.find(m);
    if (it == values.end())
      throw DomainError("substitution is missing marker '" + m + "'");
    if (it->second.markers_ != target)
      throw DomainError("substituted value for '" + m + "' is not in the target ring");
    images.push_back(&it->second);
  }

  MPoly out(target);
  for (const auto& [e, v] : terms_) {
    MPoly term(target, v);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k)
        term *= *images[i];
    out += term;
  }
  return out;
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& values) const
{
  std::map<std::string, MPoly> images;
  for (const auto& [name, v] : values)
    images.emplace(name, MPoly({}, v));
  return substitute({}, images).constant_term();
}

std::string MPoly::monomial_label(const Exponents& e) const
{
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += markers_[i];
    if (e[i] > 1)
      out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [e, v] : terms_) {
    Rational mag = abs(v);
    const bool neg = v < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const std::string label = monomial_label(e);
    if (label == "1")
      out += mag.get_str();
    else if (mag == 1)
      out += label;
    else
      out += mag.get_str() + "*" + label;
  }
  return out;
}

} // namespace cudlab
