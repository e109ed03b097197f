// Copyright 2026 The permops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permops/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "permops/errors.hpp"

namespace permops::sym {

int CycleType::n() const {
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

int CycleType::fixed_point_count() const {
    return count_of_length(1);
}

int CycleType::count_of_length(int k) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw PreconditionError("Permutation: images must be a bijection on {1..n}");
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a) - 1],
              p.images_[static_cast<std::size_t>(b) - 1]);
    return p;
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
    Permutation p = identity(n);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i];
        int to = cycle[(i + 1) % cycle.size()];
        p.images_[static_cast<std::size_t>(from) - 1] = to;
    }
    // re-validate: the cycle must not repeat elements
    return Permutation(std::move(p.images_));
}

Permutation Permutation::compose(const Permutation& q) const {
    if (n() != q.n())
        throw SizeMismatchError("compose: permutations act on different n");
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x)
        im[x] = images_[static_cast<std::size_t>(q.images_[x]) - 1];
    Permutation r = identity(n());
    r.images_ = std::move(im);
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        im[static_cast<std::size_t>(images_[x]) - 1] = static_cast<int>(x) + 1;
    Permutation r = identity(n());
    r.images_ = std::move(im);
    return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int nn = n();
    std::vector<char> seen(static_cast<std::size_t>(nn), 0);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= nn; ++start) {
        if (seen[static_cast<std::size_t>(start) - 1])
            continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x) - 1] = 1;
            cyc.push_back(x);
            x = image(x);
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleType Permutation::cycle_type() const {
    CycleType t;
    for (const auto& c : cycles())
        t.parts.push_back(static_cast<int>(c.size()));
    std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
    return t;
}

int Permutation::cycle_count() const {
    const int nn = n();
    std::vector<char> seen(static_cast<std::size_t>(nn), 0);
    int count = 0;
    for (int start = 1; start <= nn; ++start) {
        if (seen[static_cast<std::size_t>(start) - 1])
            continue;
        ++count;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x) - 1] = 1;
            x = image(x);
        } while (x != start);
    }
    return count;
}

int Permutation::derangement_size() const {
    int m = 0;
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x) + 1)
            ++m;
    return m;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x) + 1)
            return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i)
        os << (i ? " " : "") << images_[i];
    os << ']';
    return os.str();
}

std::vector<Permutation> enumerate(int n, int cap) {
    if (n < 1)
        throw PreconditionError("enumerate: n must be positive");
    if (n > cap)
        throw ResourceLimitError("enumerate: n exceeds the enumeration cap " +
                                 std::to_string(cap));
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    if (n <= 12)
        out.reserve(static_cast<std::size_t>(factorial(static_cast<unsigned long>(n)).get_ui()));
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

int relative_distance(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n())
        throw SizeMismatchError("relative_distance: permutations act on different n");
    const int n = p.n();
    // cycles of p^{-1} q: follow x -> p^{-1}(q(x)) via q then inverse lookup
    std::vector<int> pinv(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
        pinv[static_cast<std::size_t>(p.image(x)) - 1] = x;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start) - 1])
            continue;
        ++cycles;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x) - 1] = 1;
            x = pinv[static_cast<std::size_t>(q.image(x)) - 1];
        } while (x != start);
    }
    return n - cycles;
}

} // namespace permops::sym
