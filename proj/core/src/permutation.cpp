#include "geoplan/permutation.hpp"

#include "geoplan/errors.hpp"

#include <numeric>

namespace geoplan {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto i : image_) {
        if (i >= image_.size() || seen[i]) throw ValidationError("not a permutation");
        seen[i] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

std::size_t Permutation::order() const {
    std::size_t result = 1;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

Permutation Permutation::after(const Permutation& other) const {
    if (other.size() != size()) throw DimensionMismatch("permutation sizes differ");
    std::vector<std::size_t> image(size());
    for (std::size_t i = 0; i < size(); ++i) image[i] = image_[other.image_[i]];
    return Permutation(std::move(image));
}

std::string Permutation::cycles() const {
    std::string out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i] || image_[i] == i) continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            if (j != i) out += " ";
            out += std::to_string(j);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

} // namespace geoplan
