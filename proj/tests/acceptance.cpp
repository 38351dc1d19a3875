// Acceptance gate: one line per criterion, exit code = number of failures.
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "confspace/braid.hpp"
#include "confspace/homology.hpp"
#include "confspace/io.hpp"
#include "confspace/models.hpp"
#include "confspace/morphism.hpp"
#include "confspace/plane.hpp"
#include "confspace/snf.hpp"
#include "confspace/swiatkowski.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

unsigned long long g_seed = 0;

std::shared_ptr<Graph> load(const char* text) {
    return std::make_shared<Graph>(parse_graph(text));
}

const char* kY = "v c\nv a\nv b\nv d\ne ea c a\ne eb c b\ne ed c d\n";
const char* kX = "v c\nv a\nv b\nv d\nv f\ne ea c a\ne eb c b\ne ed c d\ne ef c f\n";
const char* kLollipop = "v a\nv b\ne loop a a\ne stem a b\n";
const char* kTheta = "v a\nv b\ne e1 a b\ne e2 a b\ne e3 a b\n";
const char* kK4 =
    "v a\nv b\nv c\nv d\ne ab a b\ne ac a c\ne ad a d\ne bc b c\ne bd b d\ne cd c d\n";

struct Run {
    int failures = 0;
    void criterion(int k, const std::string& label, std::function<bool()> body) {
        bool ok = false;
        std::string extra;
        try {
            ok = body();
        } catch (const std::exception& e) {
            extra = std::string(" (") + e.what() + ")";
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << k << " " << label << extra
                  << "\n";
        if (!ok) ++failures;
    }
};

template <class Complex>
std::vector<long long> bettis(const Complex& x) {
    std::vector<long long> out;
    for (const auto& h : homology(build_chain_complex(x))) out.push_back(h.betti);
    return out;
}

std::vector<long long> bettis_cc(const ChainComplex& cc) {
    std::vector<long long> out;
    for (const auto& h : homology(cc)) out.push_back(h.betti);
    return out;
}

bool no_torsion(const ChainComplex& cc) {
    for (const auto& h : homology(cc))
        if (!h.torsion.empty()) return false;
    return true;
}

// The two-squares complex: an empty square sharing one corner with a filled
// square, realized inside the product of a 4-vertex path with itself.
CubicalComplex two_squares() {
    auto g = load("v p0\nv p1\nv p2\nv p3\ne g1 p0 p1\ne g2 p1 p2\ne g3 p2 p3\n");
    std::vector<Cell> seeds = {
        // filled square [p2,p3] x [p0,p1]
        Cell{{{true, 2, false}, {true, 0, false}}},
        // hollow square boundary [p1,p2] x [p1,p2]
        Cell{{{true, 1, false}, {false, 1, false}}},
        Cell{{{true, 1, false}, {false, 2, false}}},
        Cell{{{false, 1, false}, {true, 1, false}}},
        Cell{{{false, 2, false}, {true, 1, false}}},
    };
    return close_under_faces(g, 2, CubicalComplex::Convention::labeled, seeds);
}

std::vector<long long> stable_escalation(const Graph& base, int n) {
    std::vector<long long> prev;
    for (int segments = n;; segments *= 2) {
        if (segments > 256) throw std::runtime_error("escalation did not stabilize");
        auto [sub, rep] = subdivide(base, segments);
        auto g = std::make_shared<Graph>(std::move(sub));
        auto x = build_nonk(g, n, n);
        auto collapsed = collapse_free_faces(x);
        auto betti = bettis(collapsed);
        while (!betti.empty() && betti.back() == 0) betti.pop_back();
        if (!prev.empty() && betti == prev) return betti;
        prev = betti;
    }
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
            g_seed = std::stoull(argv[++i]);
    }
    Run run;

    run.criterion(1, "two-squares worked example", [] {
        auto x = two_squares();
        if (x.cell_count(0) != 7 || x.cell_count(1) != 8 || x.cell_count(2) != 1)
            return false;
        auto cc = build_chain_complex(x);
        auto hs = homology(cc);
        return hs.size() == 3 && hs[0].betti == 1 && hs[0].torsion.empty() &&
               hs[1].betti == 1 && hs[1].torsion.empty() && hs[2].betti == 0 &&
               hs[2].torsion.empty();
    });

    run.criterion(2, "two points on Y", [] {
        auto x = build_abrams(load(kY), 2);
        return x.cell_count(0) == 12 && x.cell_count(1) == 12 && x.top_dim() == 1 &&
               bettis(x) == std::vector<long long>{1, 1};
    });

    run.criterion(3, "two points on X", [] {
        auto x = build_abrams(load(kX), 2);
        return x.cell_count(0) == 20 && x.cell_count(1) == 24 &&
               bettis(x) == std::vector<long long>{1, 5};
    });

    run.criterion(4, "lollipop components and girth", [] {
        auto g = load(kLollipop);
        auto rep = check_abrams(*g, 2);
        if (rep.passed || rep.short_cycles.empty()) return false;
        auto x = build_abrams(g, 2, true);
        return bettis(x)[0] == 2;
    });

    run.criterion(5, "swiatkowski counts and Betti numbers", [] {
        auto ky = build_swiatkowski(load(kY), 2);
        auto kx = build_swiatkowski(load(kX), 2);
        return ky.cell_count(0) == 18 && ky.cell_count(1) == 18 &&
               bettis(ky) == std::vector<long long>{1, 1} &&
               kx.cell_count(0) == 28 && kx.cell_count(1) == 32 &&
               euler_characteristic(kx) == -4 &&
               bettis(kx) == std::vector<long long>{1, 5};
    });

    run.criterion(6, "non-3-equal on the subdivided Y", [] {
        auto [sub, rep] = subdivide(*load(kY), 3);
        auto g = std::make_shared<Graph>(std::move(sub));
        auto x = build_nonk(g, 3, 3);
        auto b = bettis(x);
        b.resize(3);
        return b == std::vector<long long>{1, 0, 5};
    });

    run.criterion(7, "non-n-equal interval reproduces spheres", [] {
        auto path = load("v a\nv b\ne e1 a b\n");
        auto b3 = stable_escalation(*path, 3);
        auto b4 = stable_escalation(*path, 4);
        return b3 == std::vector<long long>{1, 1} &&
               b4 == std::vector<long long>{1, 0, 1};
    });

    run.criterion(8, "boundary, collapse and Euler properties", [] {
        std::mt19937 rng(static_cast<std::uint32_t>(g_seed ^ 0x9e3779b9u));
        long long cells = 0;
        for (int trial = 0; trial < 250; ++trial) {
            auto g = std::make_shared<Graph>(oracle::random_graph(rng, 8, 12));
            std::uniform_int_distribution<int> np(2, 3);
            std::uniform_int_distribution<int> coin(0, 1);
            std::uniform_int_distribution<int> die(0, 9);
            int n = np(rng);
            std::vector<Cell> seeds;
            std::uniform_int_distribution<int> nseeds(8, 24);
            std::uniform_int_distribution<int> pv(0, g->vertex_count() - 1);
            int want = nseeds(rng);
            for (int s = 0; s < want; ++s) {
                Cell c;
                for (int i = 0; i < n; ++i) {
                    if (g->edge_count() > 0 && die(rng) < 7) {
                        std::uniform_int_distribution<int> pe(0, g->edge_count() - 1);
                        c.factors.push_back({true, pe(rng), false});
                    } else {
                        c.factors.push_back({false, pv(rng), false});
                    }
                }
                seeds.push_back(c);
            }
            auto conv = coin(rng) ? CubicalComplex::Convention::labeled
                                  : CubicalComplex::Convention::sorted_quotient;
            auto x = close_under_faces(g, n, conv, seeds);
            auto cc = build_chain_complex(x);  // throws if dd != 0
            for (long long r : cc.rank) cells += r;
        }
        if (cells < 10000) return false;

        // Collapse invariance and Euler = alternating Betti sum on the corpus.
        std::vector<std::function<ChainComplex()>> corpus;
        corpus.push_back([] { return build_chain_complex(build_abrams(load(kY), 2)); });
        corpus.push_back(
            [] { return build_chain_complex(build_abrams(load(kX), 2)); });
        corpus.push_back([] {
            return build_chain_complex(build_abrams(load(kLollipop), 2, true));
        });
        corpus.push_back([] {
            return build_chain_complex(build_unlabeled_abrams(load(kTheta), 2, true));
        });
        corpus.push_back(
            [] { return build_chain_complex(build_abrams(load(kK4), 2)); });
        corpus.push_back(
            [] { return build_chain_complex(build_swiatkowski(load(kX), 2)); });
        corpus.push_back([] {
            auto [sub, rep] = subdivide(*load(kY), 3);
            return build_chain_complex(
                build_nonk(std::make_shared<Graph>(std::move(sub)), 3, 3));
        });
        std::vector<std::function<ChainComplex()>> collapsed;
        collapsed.push_back([] {
            return build_chain_complex(collapse_free_faces(build_abrams(load(kY), 2)));
        });
        collapsed.push_back([] {
            return build_chain_complex(collapse_free_faces(build_abrams(load(kX), 2)));
        });
        collapsed.push_back([] {
            return build_chain_complex(
                collapse_free_faces(build_abrams(load(kLollipop), 2, true)));
        });
        collapsed.push_back([] {
            return build_chain_complex(
                collapse_free_faces(build_unlabeled_abrams(load(kTheta), 2, true)));
        });
        collapsed.push_back([] {
            return build_chain_complex(collapse_free_faces(build_abrams(load(kK4), 2)));
        });
        collapsed.push_back([] {
            return build_chain_complex(
                collapse_free_faces(build_swiatkowski(load(kX), 2)));
        });
        collapsed.push_back([] {
            auto [sub, rep] = subdivide(*load(kY), 3);
            return build_chain_complex(collapse_free_faces(
                build_nonk(std::make_shared<Graph>(std::move(sub)), 3, 3)));
        });
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            auto cc = corpus[i]();
            auto dd = collapsed[i]();
            auto ha = bettis_cc(cc);
            auto hb = bettis_cc(dd);
            while (!ha.empty() && ha.back() == 0) ha.pop_back();
            while (!hb.empty() && hb.back() == 0) hb.pop_back();
            if (ha != hb) return false;
            long long alt = 0;
            for (std::size_t k = 0; k < ha.size(); ++k)
                alt += (k % 2 ? -1 : 1) * ha[k];
            // Torsion does not contribute to Euler characteristics.
            if (euler_characteristic(cc) != alt) return false;
        }
        return true;
    });

    run.criterion(9, "Smith normal form against the rational oracle", [] {
        std::mt19937 rng(static_cast<std::uint32_t>(g_seed ^ 0x51f15eedu));
        std::uniform_int_distribution<int> size(1, 8);
        std::uniform_int_distribution<long long> entry(-9, 9);
        for (int trial = 0; trial < 500; ++trial) {
            int rows = size(rng), cols = size(rng);
            std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
            DenseMatrix am(rows, std::vector<mpz_class>(cols));
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    a[i][j] = entry(rng);
                    am[i][j] = static_cast<long>(a[i][j]);
                }
            auto d = smith_normal_form(a);
            if (matmul(matmul(d.U, am), d.V) != d.D()) return false;
            if (!is_identity(matmul(d.U, d.Uinv))) return false;
            if (!is_identity(matmul(d.V, d.Vinv))) return false;
            for (int i = 0; i + 1 < d.rank; ++i)
                if (d.diagonal[i + 1] % d.diagonal[i] != 0) return false;
            if (d.rank != oracle::rational_rank(am)) return false;
        }
        return true;
    });

    run.criterion(10, "induced maps for the four arm embeddings", [] {
        auto y = load(kY);
        auto x = load(kX);
        auto src = build_abrams(y, 2);
        auto dst = build_abrams(x, 2);
        auto scc = build_chain_complex(src);
        auto dcc = build_chain_complex(dst);
        auto sb = homology_basis(scc);
        auto db = homology_basis(dcc);
        // Four embeddings: the image misses one arm of X each time.
        const char* arms[4] = {"a", "b", "d", "f"};
        for (int omit = 0; omit < 4; ++omit) {
            std::ostringstream ss;
            ss << "gm v c c\n";
            int next = 0;
            const char* ys[3] = {"a", "b", "d"};
            const char* yedges[3] = {"ea", "eb", "ed"};
            for (int j = 0; j < 4; ++j) {
                if (j == omit) continue;
                ss << "gm v " << ys[next] << " " << arms[j] << "\n";
                ss << "gm e " << yedges[next] << " e" << arms[j] << "\n";
                ++next;
            }
            auto e = parse_embedding(ss.str(), *y, *x);
            // induced_cell_map verifies the chain-map identity internally.
            auto f = induced_cell_map(e, src, dst);
            auto h = induced_homology_map(f, scc, sb, dcc, db);
            bool nonzero = false;
            for (const auto& row : h.degrees[1].free_map)
                for (const auto& v : row)
                    if (v != 0) nonzero = true;
            if (!nonzero) return false;
        }
        return true;
    });

    run.criterion(11, "braid homomorphism and relation moves", [] {
        std::mt19937 rng(static_cast<std::uint32_t>(g_seed ^ 0xb7a1d5eeu));
        std::uniform_int_distribution<int> ns(2, 6);
        auto random_word = [&](int strands, int max_len) {
            std::uniform_int_distribution<int> len(0, max_len);
            std::uniform_int_distribution<int> gen(1, strands - 1);
            std::uniform_int_distribution<int> sign(0, 1);
            BraidWord w{strands, {}};
            int l = len(rng);
            for (int i = 0; i < l; ++i)
                w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
            return w;
        };
        for (int trial = 0; trial < 1000; ++trial) {
            int n = ns(rng);
            BraidWord u = random_word(n, 8), v = random_word(n, 8);
            BraidWord uv{n, u.letters};
            uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
            if (!(permutation_image(uv) ==
                  permutation_image(u).then(permutation_image(v))))
                return false;
        }
        // Both Artin moves preserve the invariants; plant a matching subword
        // so every trial exercises one.
        std::uniform_int_distribution<int> nbig(4, 6);
        std::uniform_int_distribution<int> kindd(0, 2);
        std::uniform_int_distribution<int> signd(0, 1);
        for (int trial = 0; trial < 300; ++trial) {
            int n = nbig(rng);
            BraidWord w = random_word(n, 10);
            auto rel = static_cast<BraidRelation>(kindd(rng));
            int s = signd(rng) ? 1 : -1;
            std::vector<int> planted;
            if (rel == BraidRelation::commute) {
                std::uniform_int_distribution<int> gi(1, n - 3);
                int i = gi(rng);
                std::uniform_int_distribution<int> gk(i + 2, n - 1);
                planted = {s * i, s * gk(rng)};
            } else {
                std::uniform_int_distribution<int> gi(1, n - 2);
                int i = gi(rng);
                if (rel == BraidRelation::braid)
                    planted = {s * i, s * (i + 1), s * i};
                else
                    planted = {s * (i + 1), s * i, s * (i + 1)};
            }
            std::uniform_int_distribution<int> pos(0,
                                                   static_cast<int>(w.letters.size()));
            int at = pos(rng);
            w.letters.insert(w.letters.begin() + at, planted.begin(), planted.end());
            auto moved = apply_relation(w, at, rel);
            if (!moved) return false;
            if (!(permutation_image(*moved) == permutation_image(w))) return false;
            if (exponent_sum(*moved) != exponent_sum(w)) return false;
        }
        BraidWord s1s1 = parse_braid_word(3, "s1 s1");
        return is_pure(s1s1) && exponent_sum(s1s1) == 2 &&
               !free_reduce(s1s1).letters.empty();
    });

    run.criterion(12, "plane homeomorphism round trip", [] {
        std::mt19937 rng(static_cast<std::uint32_t>(g_seed ^ 0x9123afc1u));
        std::uniform_real_distribution<double> center(-100.0, 100.0);
        std::uniform_real_distribution<double> logsep(std::log(1e-6), std::log(1e6));
        std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
        double worst = 0.0;
        for (int trial = 0; trial < 100000; ++trial) {
            PlanarPair p;
            p.x = {center(rng), center(rng)};
            double r = std::exp(logsep(rng));
            double th = angle(rng);
            p.y = {p.x[0] + r * std::cos(th), p.x[1] + r * std::sin(th)};
            PlanarPair back = product_to_pair(pair_to_product(p));
            for (int i = 0; i < 2; ++i) {
                worst = std::max(worst, std::abs(back.x[i] - p.x[i]));
                worst = std::max(worst, std::abs(back.y[i] - p.y[i]));
            }
        }
        return worst < 1e-9;
    });

    run.criterion(13, "unlabeled quotient and cell-count ratios", [] {
        auto y = load(kY);
        auto u2 = build_unlabeled_abrams(y, 2);
        if (u2.cell_count(0) != 6 || u2.cell_count(1) != 6) return false;
        if (bettis(u2) != std::vector<long long>{1, 1}) return false;
        auto l2 = build_abrams(y, 2);
        for (int k = 0; k <= l2.top_dim(); ++k)
            if (l2.cell_count(k) != 2 * u2.cell_count(k)) return false;
        // Triple points on a long path: ratio 3! = 6.
        auto path =
            load("v a\nv b\nv c\nv d\nv e\ne e1 a b\ne e2 b c\ne e3 c d\ne e4 d e\n");
        auto l3 = build_abrams(path, 3, true);
        auto u3 = build_unlabeled_abrams(path, 3, true);
        if (l3.top_dim() != u3.top_dim()) return false;
        for (int k = 0; k <= l3.top_dim(); ++k)
            if (l3.cell_count(k) != 6 * u3.cell_count(k)) return false;
        return true;
    });

    std::cout << (run.failures == 0 ? "all criteria passed"
                                    : std::to_string(run.failures) + " criteria failed")
              << "\n";
    return run.failures;
}
