#pragma once

// Binary relations on a finite carrier {0, ..., n-1}, stored as packed bit
// rows, together with the subset operators X* and X-dagger of the polarity
// a relation induces and Galois-connection checks for pairs of maps.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rrs {

using Element = std::uint8_t;

/// Largest carrier a relation can hold (one 64-bit word per row).
inline constexpr std::size_t kMaxUniverse = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called on a value that violates its
/// documented precondition (e.g. a join table is required but absent).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A subset X of the carrier, one bit per element.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t size, std::uint64_t bits = 0);

  static SubsetMask full(std::size_t size);
  static SubsetMask of(std::size_t size, std::initializer_list<Element> elements);
  static SubsetMask of(std::size_t size, std::span<const Element> elements);

  std::size_t size() const noexcept { return size_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Element x) const noexcept { return x < size_ && ((bits_ >> x) & 1U) != 0; }
  void insert(Element x);
  void erase(Element x);

  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_subset_of(const SubsetMask& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Members in increasing order.
  std::vector<Element> elements() const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

 private:
  std::size_t size_ = 0;
  std::uint64_t bits_ = 0;
};

std::uint64_t full_mask(std::size_t size) noexcept;

/// A binary relation R on {0..n-1}; bit y of row x is set iff (x,y) in R.
class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(std::size_t size);

  static BinRel empty(std::size_t size) { return BinRel(size); }
  static BinRel full(std::size_t size);
  static BinRel identity(std::size_t size);
  static BinRel from_pairs(std::size_t size,
                           std::initializer_list<std::pair<Element, Element>> pairs);
  /// Row-major n*n 0/1 matrix.
  static BinRel from_matrix(std::size_t size, std::span<const int> entries);

  std::size_t size() const noexcept { return rows_.size(); }

  bool holds(Element x, Element y) const noexcept { return ((rows_[x] >> y) & 1U) != 0; }
  void set(Element x, Element y, bool value = true);

  std::uint64_t row(Element x) const noexcept { return rows_[x]; }
  void set_row(Element x, std::uint64_t bits);
  /// Bit x set iff (x,y) in R.
  std::uint64_t column(Element y) const noexcept;

  friend bool operator==(const BinRel&, const BinRel&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

bool is_reflexive(const BinRel& r) noexcept;
bool is_transitive(const BinRel& r) noexcept;
bool is_antisymmetric(const BinRel& r) noexcept;
bool is_preorder(const BinRel& r) noexcept;
bool is_partial_order(const BinRel& r) noexcept;

/// First (x,y,z) in lexicographic order with xRy, yRz but not xRz.
std::optional<std::array<Element, 3>> transitivity_violation(const BinRel& r);

/// x and y are incomparable: neither (x,y) nor (y,x) is in R.
/// Throws std::out_of_range for indices outside the carrier.
bool incomparable(const BinRel& r, Element x, Element y);

/// X* = { y : (x,y) in R for every x in X }.  star(empty) is the full carrier.
SubsetMask star(const BinRel& r, const SubsetMask& x_set);

/// X-dagger = { x : (x,y) in R for every y in X }.  dagger(empty) is the full carrier.
SubsetMask dagger(const BinRel& r, const SubsetMask& y_set);

inline constexpr std::size_t kDefaultPolarityCap = 10;

/// Checks X1 <= dagger(X2)  <=>  X2 <= star(X1) over all 4^n pairs of subsets.
/// Throws Error when r.size() exceeds max_size.
bool is_polarity_pair(const BinRel& r, std::size_t max_size = kDefaultPolarityCap);

/// A total map on a carrier, as a table of images.
using MapTable = std::vector<Element>;

/// First (x,y) where (x, g(y)) in R and (f(x), y) in R disagree.
std::optional<std::array<Element, 2>> galois_violation(const MapTable& f, const MapTable& g,
                                                       const BinRel& r);

bool is_galois_connection(const MapTable& f, const MapTable& g, const BinRel& r);

/// f: B -> C and g: C -> B with (f(b), c) in R2 iff (b, g(c)) in R1.
/// Throws Error on dimension mismatch.
bool is_residuated_map_pair(const MapTable& f, const MapTable& g, const BinRel& r1,
                            const BinRel& r2);

}  // namespace rrs
