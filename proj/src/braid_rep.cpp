#include "braidloc/braid_rep.hpp"

#include <cctype>
#include <numeric>
#include <string>
#include <unordered_set>

#include "braidloc/error.hpp"
#include "internal/parallel.hpp"

namespace braidloc::braid {

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (static_cast<unsigned char>(text[i]) == 0xE2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
    } else if (text[i] == ',') {
      s += ' ';
    } else {
      s += text[i];
    }
  }
  BraidWord w;
  w.strands = strands;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    std::size_t used = 0;
    int letter = 0;
    try {
      letter = std::stoi(s.substr(pos), &used);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "cannot parse braid word '" + std::string(text) + "'");
    }
    pos += used;
    if (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])))
      fail(ErrorCode::ParseError, "cannot parse braid word '" + std::string(text) + "'");
    w.letters.push_back(letter);
  }
  w.validate();
  return w;
}

void BraidWord::validate() const {
  if (strands < 2) fail(ErrorCode::InvalidArgument, "braid words need at least 2 strands");
  for (int l : letters)
    if (l == 0 || std::abs(l) > strands - 1)
      fail(ErrorCode::InvalidArgument, "braid letter " + std::to_string(l) + " out of range for " +
                                           std::to_string(strands) + " strands");
}

RepSpec rep_from_r(const ybe::RMatrixSpec& r, int n, bool skip_ybe_check, double tol) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "representations need n >= 2");
  if (!skip_ybe_check && !ybe::check_ybe(r.matrix, r.local_dim, tol))
    fail(ErrorCode::YbeFailure, "matrix does not satisfy the Yang-Baxter equation");
  const SqMatrix r_inv = inverse(r.matrix, tol);
  RepSpec rep;
  rep.n = n;
  for (int i = 1; i < n; ++i) {
    rep.generators.push_back(amplify(r.matrix, i, n, r.local_dim));
    rep.inverses.push_back(amplify(r_inv, i, n, r.local_dim));
  }
  return rep;
}

RepSpec rep_from_generators(int n, std::vector<SqMatrix> generators, double tol) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "representations need n >= 2");
  if (generators.size() != static_cast<std::size_t>(n - 1))
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(n - 1) + " generator images");
  RepSpec rep;
  rep.n = n;
  for (const SqMatrix& g : generators) {
    if (g.dim() != generators.front().dim())
      fail(ErrorCode::DimensionMismatch, "generator images differ in dimension");
    if (g.backend() != generators.front().backend())
      fail(ErrorCode::BackendMismatch, "generator images use different backends");
    rep.inverses.push_back(inverse(g, tol));
  }
  rep.generators = std::move(generators);
  return rep;
}

SqMatrix eval(const RepSpec& rep, const BraidWord& word) {
  if (word.strands != rep.n)
    fail(ErrorCode::InvalidArgument, "word has " + std::to_string(word.strands) +
                                         " strands but the representation has " + std::to_string(rep.n));
  word.validate();
  SqMatrix out = SqMatrix::identity(rep.dim(), rep.backend());
  for (int l : word.letters) out = out * (l > 0 ? rep.generators[l - 1] : rep.inverses[-l - 1]);
  return out;
}

bool check_braid_relations(const RepSpec& rep, double tol) {
  const auto& g = rep.generators;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (!(g[i] * g[i + 1] * g[i]).equals(g[i + 1] * g[i] * g[i + 1], tol)) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 2; j < g.size(); ++j)
      if (!(g[i] * g[j]).equals(g[j] * g[i], tol)) return false;
  return true;
}

namespace {

// Divides by the first nonzero entry and re-expresses in Q(zeta_L).
ExactMatrix canonical(const ExactMatrix& m, int L) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!m.entry_is_zero(i, j)) {
        ExactMatrix c = m.scaled(m.entry(i, j).inv());
        return c.conductor() == L ? c : c.embedded(L);
      }
  fail(ErrorCode::NotInvertible, "zero matrix in the image");
}

std::string key_of(const ExactMatrix& m) {
  std::string key;
  auto append = [&key](const BigInt& z) {
    std::size_t count = 0;
    void* raw = mpz_export(nullptr, &count, 1, 1, 1, 0, z.get_mpz_t());
    key.push_back(static_cast<char>(sgn(z) + 1));
    const auto len = static_cast<std::uint32_t>(count);
    key.append(reinterpret_cast<const char*>(&len), sizeof len);
    key.append(static_cast<const char*>(raw), count);
    void (*free_fn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(raw, count);
  };
  append(m.den());
  const auto& num = m.num();
  for (std::size_t e = 0; e < num.size(); ++e) {
    if (sgn(num[e]) == 0) continue;
    const auto idx = static_cast<std::uint32_t>(e);
    key.append(reinterpret_cast<const char*>(&idx), sizeof idx);
    append(num[e]);
  }
  return key;
}

}  // namespace

ProbeResult probe_image(const RepSpec& rep, long bound) {
  if (rep.backend() != Backend::Exact)
    fail(ErrorCode::BackendMismatch, "image probing requires the exact backend");
  if (bound < 1) fail(ErrorCode::InvalidArgument, "probe bound must be >= 1");
  int L = 1;
  for (const SqMatrix& g : rep.generators) L = std::lcm(L, g.exact().conductor());
  std::vector<ExactMatrix> gens;
  for (const SqMatrix& g : rep.generators) gens.push_back(canonical(g.exact(), L));

  std::unordered_set<std::string> seen;
  std::vector<ExactMatrix> frontier{ExactMatrix::identity(rep.dim()).embedded(L)};
  seen.insert(key_of(frontier.front()));
  ProbeResult result;
  while (!frontier.empty()) {
    const std::size_t count = frontier.size() * gens.size();
    std::vector<ExactMatrix> products(count);
    std::vector<std::string> keys(count);
    detail::parallel_for(count, 4, [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        products[t] = canonical(frontier[t / gens.size()] * gens[t % gens.size()], L);
        keys[t] = key_of(products[t]);
      }
    });
    std::vector<ExactMatrix> next;
    for (std::size_t t = 0; t < count; ++t) {
      if (!seen.insert(std::move(keys[t])).second) continue;
      if (static_cast<long>(seen.size()) > bound) {
        result.status = ProbeResult::Status::ExceedsBound;
        result.elements_explored = static_cast<long>(seen.size());
        return result;
      }
      next.push_back(std::move(products[t]));
    }
    frontier = std::move(next);
  }
  result.status = ProbeResult::Status::Finite;
  result.order = static_cast<long>(seen.size());
  result.elements_explored = result.order;
  return result;
}

}  // namespace braidloc::braid
