#include "rankcode/oracle.hpp"

#include <climits>
#include <string>

#include <omp.h>

namespace rankcode {

namespace {

void guard_field(const FieldContext& f) {
  if (f.size() > kFieldEnumLimit)
    throw Error(ErrorCode::TooLarge, "field of size " + std::to_string(f.size()) + " is past the enumeration guard");
}

struct Best {
  int distance = INT_MAX;
  std::uint64_t index = 0;
  std::uint64_t ties = 0;

  void offer(int d, std::uint64_t idx) {
    if (d < distance || (d == distance && idx < index)) {
      if (d < distance) ties = 0;
      distance = d;
      index = idx;
    }
    if (d == distance) ++ties;
  }
  void merge(const Best& o) {
    if (o.distance < distance) {
      *this = o;
    } else if (o.distance == distance) {
      index = std::min(index, o.index);
      ties += o.ties;
    }
  }
};

NearestCodeword finish(const CodeSpec& spec, const Best& b) {
  NearestCodeword out;
  out.message = message_from_index(spec, b.index);
  out.codeword = encode(spec, out.message);
  out.distance = b.distance;
  out.unique = b.ties == 1;
  return out;
}

void check_length(const CodeSpec& spec, std::span<const Element> r) {
  if (static_cast<int>(r.size()) != spec.n()) throw Error(ErrorCode::LengthMismatch, "received word must have n symbols");
}

}  // namespace

std::uint64_t message_space_size(const CodeSpec& spec) {
  std::uint64_t total = 1;
  for (int i = 0; i < spec.k(); ++i) {
    total *= spec.field().size();
    if (total > kMessageSpaceLimit)
      throw Error(ErrorCode::TooLarge, "message space exceeds 2^22; brute force refused");
  }
  return total;
}

std::vector<Element> message_from_index(const CodeSpec& spec, std::uint64_t idx) {
  const auto& f = spec.field();
  std::vector<Element> m(static_cast<std::size_t>(spec.k()));
  for (auto& x : m) {
    x = f.from_packed(idx % f.size());
    idx /= f.size();
  }
  return m;
}

NearestCodeword nearest_codeword_bruteforce_serial(const CodeSpec& spec, std::span<const Element> r) {
  check_length(spec, r);
  const std::uint64_t total = message_space_size(spec);
  Best best;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto c = encode(spec, message_from_index(spec, idx));
    best.offer(rank_distance(spec.field(), r, c), idx);
  }
  return finish(spec, best);
}

NearestCodeword nearest_codeword_bruteforce(const CodeSpec& spec, std::span<const Element> r) {
  check_length(spec, r);
  const auto total = static_cast<std::int64_t>(message_space_size(spec));
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto c = encode(spec, message_from_index(spec, static_cast<std::uint64_t>(idx)));
      local.offer(rank_distance(spec.field(), r, c), static_cast<std::uint64_t>(idx));
    }
#pragma omp critical
    best.merge(local);
  }
  return finish(spec, best);
}

int min_codeword_rank_bruteforce_serial(const CodeSpec& spec) {
  const std::uint64_t total = message_space_size(spec);
  int best = INT_MAX;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const auto c = encode(spec, message_from_index(spec, idx));
    best = std::min(best, fq_rank(spec.field(), c));
  }
  return best;
}

int min_codeword_rank_bruteforce(const CodeSpec& spec) {
  const auto total = static_cast<std::int64_t>(message_space_size(spec));
  int best = INT_MAX;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t idx = 1; idx < total; ++idx) {
    const auto c = encode(spec, message_from_index(spec, static_cast<std::uint64_t>(idx)));
    best = std::min(best, fq_rank(spec.field(), c));
  }
  return best;
}

int rank_bruteforce(const LinearizedPoly& L) {
  const auto& f = L.field();
  guard_field(f);
  std::uint64_t kernel = 0;
  for (std::uint64_t v = 0; v < f.size(); ++v)
    if (evaluate(L, f.from_packed(v)).is_zero()) ++kernel;
  int d = 0;
  for (std::uint64_t k = kernel; k > 1; k /= f.q()) ++d;
  return f.n() - d;
}

std::vector<Element> quad_roots_bruteforce(const FieldContext& f, Element r, Element s) {
  guard_field(f);
  std::vector<Element> roots;
  for (std::uint64_t v = 0; v < f.size(); ++v) {
    const Element x = f.from_packed(v);
    if (f.add(f.add(f.mul(x, x), f.mul(r, x)), s).is_zero()) roots.push_back(x);
  }
  return roots;
}

}  // namespace rankcode
