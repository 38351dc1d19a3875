// Words in the braid group B_n and their image in the symmetric group.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace confspace {

// A word is a sequence of nonzero letters: +i for the standard generator
// sigma_i, -i for its inverse, 1 <= i <= n-1.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Token syntax: s3 = sigma_3, S3 = sigma_3 inverse. Throws ParseError.
BraidWord parse_braid_word(int strands, const std::string& text);
std::string braid_word_to_string(const BraidWord& w);

// Cancels adjacent inverse pairs until none remain (confluent, order-free).
BraidWord free_reduce(const BraidWord& w);

// 0-based permutation: image[i] = endpoint of the strand starting at i.
// Letters act left to right; the letter's sign does not matter.
struct Permutation {
    std::vector<int> image;
    bool is_identity() const;
    static Permutation identity(int n);
    Permutation then(const Permutation& other) const;
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation permutation_image(const BraidWord& w);
bool is_pure(const BraidWord& w);
long long exponent_sum(const BraidWord& w);

enum class BraidRelation { commute, braid, braid_inverse };

// Rewrites the subword starting at pos by the given defining relation:
//   commute:       sigma_i sigma_k        -> sigma_k sigma_i        (|i-k| >= 2)
//   braid:         sigma_i sigma_{i+1} sigma_i -> sigma_{i+1} sigma_i sigma_{i+1}
//   braid_inverse: the reverse direction.
// All letters in the matched subword must carry the same sign. Returns nullopt
// if the subword does not match.
std::optional<BraidWord> apply_relation(const BraidWord& w, int pos, BraidRelation rel);

}  // namespace confspace
