#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncch {

// Raised when a requested dimension exceeds the desk-scale cap.
struct CapError : std::domain_error {
    using std::domain_error::domain_error;
};

// A permutation of {0,...,n-1}; images[i] is the image of i.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    static Permutation identity(int n)
    {
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            im[static_cast<std::size_t>(i)] = i;
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

private:
    std::vector<int> images_;
};

// Parity sign via inversion count.
int sign(const Permutation& p);

// (p * q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

// Hard cap on n for the (n!)^2 double sums; NCCH_MAX_N may raise it.
int max_n();

void check_cap(int n, const char* what);

// All n! permutations in lexicographic order of the image arrays.
const std::vector<Permutation>& enumerate(int n);

} // namespace ncch
