#include "confspace/braid.hpp"

#include <cstdlib>
#include <sstream>

#include "confspace/graph.hpp"  // ParseError

namespace confspace {

BraidWord parse_braid_word(int strands, const std::string& text) {
    if (strands < 1) throw ParseError(1, "strand count must be >= 1");
    BraidWord w;
    w.strands = strands;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
            throw ParseError(1, "bad letter: " + tok);
        char* end = nullptr;
        long idx = std::strtol(tok.c_str() + 1, &end, 10);
        if (*end != '\0' || idx < 1)
            throw ParseError(1, "bad generator index: " + tok);
        if (idx > strands - 1)
            throw ParseError(1, "generator " + tok + " needs at least " +
                                    std::to_string(idx + 1) + " strands");
        w.letters.push_back(tok[0] == 's' ? static_cast<int>(idx)
                                          : -static_cast<int>(idx));
    }
    return w;
}

std::string braid_word_to_string(const BraidWord& w) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) ss << ' ';
        int l = w.letters[i];
        ss << (l > 0 ? 's' : 'S') << (l > 0 ? l : -l);
    }
    return ss.str();
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    for (int l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    for (int i = 0; i < n; ++i) p.image[i] = i;
    return p;
}

Permutation Permutation::then(const Permutation& other) const {
    Permutation p;
    p.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) p.image[i] = other.image[image[i]];
    return p;
}

Permutation permutation_image(const BraidWord& w) {
    Permutation p = Permutation::identity(w.strands);
    std::vector<int> pos(w.strands);  // pos[value] = index with image[index] = value
    for (int i = 0; i < w.strands; ++i) pos[i] = i;
    for (int l : w.letters) {
        int a = (l > 0 ? l : -l) - 1;
        int ia = pos[a], ib = pos[a + 1];
        std::swap(p.image[ia], p.image[ib]);
        std::swap(pos[a], pos[a + 1]);
    }
    return p;
}

bool is_pure(const BraidWord& w) { return permutation_image(w).is_identity(); }

long long exponent_sum(const BraidWord& w) {
    long long s = 0;
    for (int l : w.letters) s += l > 0 ? 1 : -1;
    return s;
}

std::optional<BraidWord> apply_relation(const BraidWord& w, int pos, BraidRelation rel) {
    auto at = [&](int i) { return w.letters[i]; };
    int len = static_cast<int>(w.letters.size());
    BraidWord out = w;
    switch (rel) {
        case BraidRelation::commute: {
            if (pos < 0 || pos + 2 > len) return std::nullopt;
            int a = at(pos), b = at(pos + 1);
            if ((a > 0) != (b > 0)) return std::nullopt;
            int i = std::abs(a), k = std::abs(b);
            if (std::abs(i - k) < 2) return std::nullopt;
            out.letters[pos] = b;
            out.letters[pos + 1] = a;
            return out;
        }
        case BraidRelation::braid:
        case BraidRelation::braid_inverse: {
            if (pos < 0 || pos + 3 > len) return std::nullopt;
            int a = at(pos), b = at(pos + 1), c = at(pos + 2);
            if ((a > 0) != (b > 0) || (b > 0) != (c > 0)) return std::nullopt;
            if (a != c) return std::nullopt;
            int i = std::abs(a), j = std::abs(b);
            // Left side σi σi+1 σi for the forward move, σi+1 σi σi+1 reversed.
            int need = rel == BraidRelation::braid ? i + 1 : i - 1;
            if (j != need) return std::nullopt;
            out.letters[pos] = b;
            out.letters[pos + 1] = a;
            out.letters[pos + 2] = b;
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace confspace
