#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace geoplan {

// Permutation of {0..n-1}; image[i] is where i goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    const std::vector<std::size_t>& image() const { return image_; }

    bool is_identity() const;
    // Smallest k >= 1 with p^k = id.
    std::size_t order() const;
    // Apply *this after other.
    Permutation after(const Permutation& other) const;
    // Cycle notation, fixed points omitted, "()" for the identity.
    std::string cycles() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> image_;
};

} // namespace geoplan
