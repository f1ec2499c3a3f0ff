#include "cudlab/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "cudlab/errors.hpp"

namespace cudlab {

namespace {

void require_up_down(const Permutation& p, const char* map)
{
  if (!is_up_down(p.word()))
    throw DomainError(std::string(map) + ": input " + to_string(p) + " is not up-down");
}

void require_interval(std::span<const Entry> ground, const char* map)
{
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (ground[i] != static_cast<Entry>(i + 1))
      throw DomainError(std::string(map) + ": ground set must be [n]");
}

void require_cud(const CycleDecomposition& c, const char* map)
{
  for (const auto& cyc : c.cycles())
    if (!is_up_down_cycle(cyc))
      throw DomainError(std::string(map) + ": input is not cycle-up-down");
}

Word shifted(std::span<const Entry> w, Entry by)
{
  Word out(w.begin(), w.end());
  for (auto& v : out)
    v += by;
  return out;
}

} // namespace

BitWord BitWord::parse(std::string_view text)
{
  std::vector<bool> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1')
      bits.push_back(ch == '1');
    else
      throw ParseError("bit word must contain only 0 and 1: " + std::string(text));
  }
  return BitWord(std::move(bits));
}

std::string BitWord::to_string() const
{
  std::string out;
  for (bool b : bits_)
    out.push_back(b ? '1' : '0');
  return out;
}

CycleDecomposition g_even(const Permutation& p)
{
  require_up_down(p, "g");
  if (p.size() % 2)
    throw DomainError("g: input must have even length");

  const auto minima = lr_minima_positions(p);
  std::vector<Cycle> cycles;
  for (std::size_t j = 0; j < minima.size(); ++j) {
    const std::size_t end = j + 1 < minima.size() ? minima[j + 1] : p.size();
    cycles.emplace_back(p.word().begin() + static_cast<std::ptrdiff_t>(minima[j]),
                        p.word().begin() + static_cast<std::ptrdiff_t>(end));
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation g_even_inverse(const CycleDecomposition& c)
{
  require_cud(c, "g-inv");
  for (const auto& cyc : c.cycles())
    if (cyc.size() % 2)
      throw DomainError("g-inv: odd cycle present");
  return foata_word(c, true);
}

CycleDecomposition f_odd(const Permutation& p)
{
  require_up_down(p, "f");
  std::vector<Cycle> cycles;
  Word rest(p.word().begin(), p.word().end());
  while (!rest.empty()) {
    auto k = static_cast<std::size_t>(std::min_element(rest.begin(), rest.end()) - rest.begin());
    cycles.emplace_back(rest.rend() - static_cast<std::ptrdiff_t>(k + 1), rest.rend());
    rest = switched(std::span<const Entry>(rest).subspan(k + 1));
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation f_odd_inverse(const CycleDecomposition& c)
{
  require_cud(c, "f-inv");
  for (const auto& cyc : c.cycles())
    if (cyc.size() % 2 == 0)
      throw DomainError("f-inv: even cycle present");

  // Rebuild from the last cycle outwards: word = reversed(cycle) + switch(rest).
  Word word;
  const auto& cycles = c.cycles();
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Word next(it->rbegin(), it->rend());
    Word tail = switched(word);
    next.insert(next.end(), tail.begin(), tail.end());
    word = std::move(next);
  }
  return Permutation(std::move(word));
}

CycleDecomposition phi(const Permutation& p)
{
  if (p.empty() || !p.on_interval())
    throw DomainError("phi: input must be a nonempty permutation of [n+1]");
  require_up_down(p, "phi");

  const Word shifted_word = shifted(p.word(), -1);
  const auto one = static_cast<std::size_t>(
      std::find(shifted_word.begin(), shifted_word.end(), 0) - shifted_word.begin());
  const std::span<const Entry> w(shifted_word);

  auto even = g_even(Permutation(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(one))));
  auto odd = f_odd(Permutation(switched(w.subspan(one + 1))));

  std::vector<Cycle> cycles = even.cycles();
  cycles.insert(cycles.end(), odd.cycles().begin(), odd.cycles().end());
  return CycleDecomposition(std::move(cycles));
}

Permutation phi_inverse(const CycleDecomposition& c)
{
  require_interval(c.ground(), "phi-inv");
  require_cud(c, "phi-inv");

  std::vector<Cycle> even, odd;
  for (const auto& cyc : c.cycles())
    (cyc.size() % 2 ? odd : even).push_back(cyc);

  const Permutation prefix = g_even_inverse(CycleDecomposition(std::move(even)));
  const Permutation suffix = f_odd_inverse(CycleDecomposition(std::move(odd)));

  Word word(prefix.word().begin(), prefix.word().end());
  word.push_back(0);
  Word tail = switched(suffix.word());
  word.insert(word.end(), tail.begin(), tail.end());
  return Permutation(shifted(word, 1));
}

CycleDecomposition jbij(const Permutation& p)
{
  if (p.empty() || !p.on_interval())
    throw DomainError("jbij: input must be a nonempty permutation of [n+1]");
  require_up_down(p, "jbij");

  // The working word keeps its extreme-element positions under whole-word
  // switches, so each pass peels the suffix starting at the rightmost one.
  Word tau(p.word().begin(), p.word().end());
  std::vector<Cycle> cycles;
  while (tau.size() > 1) {
    const auto extremes = extreme_positions(Permutation(tau));
    const std::size_t j = extremes.back();
    if (tau[j] > tau[0])
      tau = switched(tau);
    cycles.emplace_back(tau.begin() + static_cast<std::ptrdiff_t>(j), tau.end());
    tau.resize(j);
  }
  if (tau.front() != static_cast<Entry>(p.size()))
    throw std::logic_error("jbij: last remaining entry is not n+1");
  return CycleDecomposition(std::move(cycles));
}

Permutation jbij_inverse(const CycleDecomposition& c)
{
  require_interval(c.ground(), "jbij-inv");
  require_cud(c, "jbij-inv");

  Word tau{static_cast<Entry>(c.degree() + 1)};
  const Permutation foata = foata_word(c, true);
  tau.insert(tau.end(), foata.word().begin(), foata.word().end());

  // Each switch strictly lengthens the alternating prefix.
  while (true) {
    std::size_t k = 1;
    while (k < tau.size() && is_alternating(std::span<const Entry>(tau).first(k + 1)))
      ++k;
    if (k == tau.size())
      break;
    switch_range(tau, 0, k);
  }
  if (is_up_down(tau))
    return Permutation(std::move(tau));
  return Permutation(switched(tau));
}

Permutation foata_word(const CycleDecomposition& c, bool descending)
{
  Word word;
  auto append = [&](const Cycle& cyc) { word.insert(word.end(), cyc.begin(), cyc.end()); };
  if (descending)
    std::for_each(c.cycles().rbegin(), c.cycles().rend(), append);
  else
    std::for_each(c.cycles().begin(), c.cycles().end(), append);
  return Permutation(std::move(word));
}

CycleDecomposition from_foata_word(const Permutation& w)
{
  const auto minima = lr_minima_positions(w);
  std::vector<Cycle> cycles;
  for (std::size_t j = 0; j < minima.size(); ++j) {
    const std::size_t end = j + 1 < minima.size() ? minima[j + 1] : w.size();
    cycles.emplace_back(w.word().begin() + static_cast<std::ptrdiff_t>(minima[j]),
                        w.word().begin() + static_cast<std::ptrdiff_t>(end));
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation rotate_ud(const Permutation& p, int i)
{
  if (p.empty() || p.size() % 2 || !is_up_down(p.word()))
    throw DomainError("rotate: input must be up-down of even length");
  if (p[0] != *std::min_element(p.word().begin(), p.word().end()))
    throw DomainError("rotate: input must start with its smallest entry");
  const int k = static_cast<int>(p.size() / 2);
  if (i < 1 || i > k)
    throw DomainError("rotate: index must lie in [1, " + std::to_string(k) + "]");

  Word w(p.word().begin(), p.word().end());
  std::rotate(w.begin(), w.begin() + 2 * (i - 1), w.end());
  return Permutation(std::move(w));
}

std::pair<Permutation, int> unrotate_ud(const Permutation& p)
{
  if (!is_member(p, Family::ud_last_gt_first))
    throw DomainError("unrotate: input must be up-down of even length with last > first");
  Word w(p.word().begin(), p.word().end());
  const auto n = w.size();
  const auto j = static_cast<std::size_t>(std::min_element(w.begin(), w.end()) - w.begin());
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
  // p_1 sits at 0-based offset (n - j) % n of the rotated word, which is 2(i-1).
  const int i = static_cast<int>(((n - j) % n) / 2) + 1;
  return {Permutation(std::move(w)), i};
}

Permutation h_map(const Permutation& p, const MinMaxPattern& s)
{
  const auto positions = min_max_positions(p, s);
  Word tau = s.at(0) == Extremum::max ? switched(p.word())
                                      : Word(p.word().begin(), p.word().end());
  for (std::size_t j = 0; j + 1 < positions.size(); ++j)
    if (s.at(j) != s.at(j + 1))
      switch_range(tau, positions[j] + 1, tau.size());
  std::reverse(tau.begin(), tau.end());
  return Permutation(std::move(tau));
}

Permutation ell_map(const Permutation& p, const BitWord& s)
{
  if (!p.on_interval())
    throw DomainError("ell: permutation must be on [n-1]");
  const auto minima = lr_minima_positions(p);
  if (s.size() != minima.size())
    throw DomainError("ell: bit word has length " + std::to_string(s.size()) +
                      " but the permutation has " + std::to_string(minima.size()) +
                      " left-to-right minima");

  // tau_0 = n is stored at index 0, so p's position i is tau index i + 1.
  Word tau{static_cast<Entry>(p.size() + 1)};
  tau.insert(tau.end(), p.word().begin(), p.word().end());
  const std::size_t k = minima.size();
  for (std::size_t j = k; j-- > 0;) {
    const bool next = j + 1 < k ? s[j + 1] : false;
    if (s[j] != next)
      switch_range(tau, 0, minima[j] + 2);
  }
  return Permutation(std::move(tau));
}

std::pair<Permutation, BitWord> ell_inverse(const Permutation& q)
{
  if (!q.on_interval())
    throw DomainError("ell-inv: permutation must be on [n]");
  const auto extremes = extreme_positions(q);
  if (extremes.empty())
    throw DomainError("ell-inv: permutation has no extreme elements");

  std::vector<bool> bits;
  for (auto e : extremes)
    bits.push_back(q[e] > q[0]);

  Word sigma(q.word().begin(), q.word().end());
  const std::size_t k = extremes.size();
  for (std::size_t j = k; j-- > 0;) {
    const bool next = j + 1 < k ? bits[j + 1] : false;
    if (bits[j] != next)
      switch_range(sigma, 0, extremes[j] + 1);
  }
  if (sigma.front() != static_cast<Entry>(q.size()))
    throw std::logic_error("ell-inv: first entry is not n after undoing the switches");
  sigma.erase(sigma.begin());
  return {Permutation(std::move(sigma)), BitWord(std::move(bits))};
}

} // namespace cudlab
