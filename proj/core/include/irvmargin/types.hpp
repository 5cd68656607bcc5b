#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace irvmargin {

/// Dense candidate index, 0..num_candidates-1.
using CandidateId = std::uint32_t;

/// Ballot preference list, most preferred first. No duplicates.
using Ranking = std::vector<CandidateId>;

/// Candidates in elimination sequence. The last entry is the winner of the
/// election reduced to the candidates of the order.
using EliminationOrder = std::vector<CandidateId>;

using BallotCount = std::int64_t;

inline constexpr std::size_t kMaxCandidates = 64;

/// Manipulation model for margin computations.
enum class Mode { modify, add, remove };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view text);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ballot input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size guard (class enumeration cap, oracle state space) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Set of candidates as a 64-bit mask.
class CandidateSet {
 public:
  constexpr CandidateSet() = default;
  constexpr explicit CandidateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr CandidateSet all(std::size_t n) {
    return CandidateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <typename Range>
  static CandidateSet of(const Range& candidates) {
    CandidateSet s;
    for (CandidateId c : candidates) s.insert(c);
    return s;
  }

  constexpr bool contains(CandidateId c) const { return (bits_ >> c) & 1U; }
  constexpr void insert(CandidateId c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(CandidateId c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr CandidateSet with(CandidateId c) const {
    return CandidateSet(bits_ | (std::uint64_t{1} << c));
  }
  constexpr CandidateSet without(CandidateId c) const {
    return CandidateSet(bits_ & ~(std::uint64_t{1} << c));
  }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(CandidateSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr CandidateSet operator&(CandidateSet o) const { return CandidateSet(bits_ & o.bits_); }
  constexpr CandidateSet operator|(CandidateSet o) const { return CandidateSet(bits_ | o.bits_); }
  constexpr CandidateSet operator-(CandidateSet o) const { return CandidateSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const CandidateSet&) const = default;

  std::vector<CandidateId> members() const {
    std::vector<CandidateId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<CandidateId>(std::countr_zero(b)));
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace irvmargin
