#include "ncch/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

namespace ncch {

int sign(const Permutation& p)
{
    const auto& im = p.images();
    int inversions = 0;
    for (std::size_t i = 0; i < im.size(); ++i)
        for (std::size_t j = i + 1; j < im.size(); ++j)
            if (im[i] > im[j])
                ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        im[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation(std::move(im));
}

int max_n()
{
    static const int cap = [] {
        if (const char* env = std::getenv("NCCH_MAX_N")) {
            const int v = std::atoi(env);
            if (v >= 1)
                return v;
        }
        return 6;
    }();
    return cap;
}

void check_cap(int n, const char* what)
{
    if (n < 1)
        throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
    if (n > max_n())
        throw CapError(std::string(what) + ": n = " + std::to_string(n) +
                       " exceeds the cap of " + std::to_string(max_n()) +
                       " (set NCCH_MAX_N to raise it)");
}

const std::vector<Permutation>& enumerate(int n)
{
    check_cap(n, "perm::enumerate");
    static std::map<int, std::vector<Permutation>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    std::vector<Permutation> all;
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        im[static_cast<std::size_t>(i)] = i;
    do {
        all.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return cache.emplace(n, std::move(all)).first->second;
}

} // namespace ncch
