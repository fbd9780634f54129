// A single transformation of {0, ..., k-1}, composed left to right.

#ifndef SEMIBAND_TRANSFORMATION_HPP
#define SEMIBAND_TRANSFORMATION_HPP

#include <compare>
#include <string>
#include <vector>

#include "semiband/errors.hpp"

namespace semiband {

  struct Transformation {
    std::vector<Elem> images;

    std::size_t degree() const noexcept {
      return images.size();
    }

    Elem operator[](Elem x) const noexcept {
      return images[x];
    }

    // x(ab) = (xa)b
    Transformation operator*(Transformation const& b) const;

    std::vector<Elem> image_set() const;
    std::size_t       rank() const;
    bool              is_idempotent() const;

    // Space-separated images, the .tfm line format.
    std::string to_string() const;

    friend auto operator<=>(Transformation const&, Transformation const&) = default;
    friend bool operator==(Transformation const&, Transformation const&)  = default;
  };

}  // namespace semiband

#endif  // SEMIBAND_TRANSFORMATION_HPP
