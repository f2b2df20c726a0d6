// Acceptance gate: one pass/fail line per criterion, nonzero exit on
// any failure.  Everything here is exact; there are no tolerances.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <nakayama/nakayama.hpp>

using namespace nakayama;

namespace {

bool all_ok = true;

void report(int number, const std::string& name, bool pass, long long ms) {
    std::cout << "criterion " << number << " (" << name << "): "
              << (pass ? "PASS" : "FAIL") << " [" << ms << " ms]\n";
    if (!pass) all_ok = false;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = fn();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report(number, name, pass, ms);
}

// --------------------------------------------------------------------------

bool worked_examples() {
    bool ok = true;

    // linear [3,4,4,3,2,1]: gldim 3, printed Cartan matrix, magnitude 2
    KupischSeries a = KupischSeries::linear({3, 4, 4, 3, 2, 1});
    ok &= global_dimension(a) == HomDimension(3);
    std::vector<std::vector<int>> cm = {
        {1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 1, 0}, {0, 0, 1, 1, 1, 1},
        {0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}};
    ok &= cartan_matrix(a).rows() == cm;
    ok &= magnitude(a) == Rational(2);

    // cyclic [3,3,3,4]: gldim 5, magnitude 1, quiver 2->1->0->3 with a
    // loop at 3 of weight 1
    KupischSeries b = KupischSeries::cyclic({3, 3, 3, 4});
    ok &= global_dimension(b) == HomDimension(5);
    ok &= magnitude(b) == Rational(1);
    ok &= build_resolution_quiver(b).successors() == std::vector<int>({3, 0, 1, 3});
    CycleReport rep = cycle_report(b);
    ok &= rep.component_count == 1 && rep.cycles.size() == 1;
    ok &= rep.cycles[0].vertices == std::vector<int>{3};
    ok &= rep.cycles[0].weight == Rational(1);

    // the semilength-11 path: height 4, bounce points [2,6,9,11]
    DyckPath big = from_area({3, 5, 5, 5, 4, 3, 4, 3, 3, 3, 2, 1});
    ok &= height(big) == 4;
    ok &= bounce(big).bounce_points == std::vector<int>({2, 6, 9, 11});

    // the semilength-5 path of [3,4,4,3,2,1]: bounce count 2
    ok &= bounce(from_area({3, 4, 4, 3, 2, 1})).count == 2;

    // cyclic [12,14,16,16,16,15,14,15,14,14,14,13]: gldim 8
    KupischSeries wide =
        KupischSeries::cyclic({12, 14, 16, 16, 16, 15, 14, 15, 14, 14, 14, 13});
    ok &= global_dimension(wide) == HomDimension(8);

    // cyclic [6,8,9,9,8,7]: gldim 4 and the resolution of S_0 runs
    // P(0) <- P(1) <- P(0) <- P(3) <- P(0)
    KupischSeries s = KupischSeries::cyclic({6, 8, 9, 9, 8, 7});
    ok &= global_dimension(s) == HomDimension(4);
    std::vector<int> tops;
    UniserialModule m = simple_module(s, 0);
    while (true) {
        tops.push_back(m.vertex());
        if (m.is_projective(s)) break;
        m = syzygy(s, m);
    }
    ok &= tops == std::vector<int>({0, 1, 0, 3, 0});
    ok &= dyck_to_sincere(from_area({3, 4, 4, 3, 2, 1})).entries() ==
          std::vector<int>({6, 8, 9, 9, 8, 7});

    return ok;
}

bool equidistribution() {
    for (int n = 1; n <= 12; ++n) {
        EquidistributionReport r = verify_equidistribution(n);
        if (!r.equal) return false;
        if (r.gldim.total != catalan(n - 1)) return false;
    }
    return true;
}

bool sincere_bounce() {
    for (int n = 0; n <= 9; ++n) {
        bool ok = true;
        for_each_dyck_path(n, [&](const DyckPath& d) {
            if (!ok) return;
            KupischSeries a = dyck_to_sincere(d);
            BouncePath b = bounce(d);
            HomDimension g = global_dimension(a);
            if (g.is_infinite() || g.value() != 2 * b.count) { ok = false; return; }
            // resolution pattern: P_{2t} = e_0 A, P_{2t+1} = e_{b_t+1} A
            std::vector<int> tops;
            UniserialModule m = simple_module(a, 0);
            while (!m.is_zero()) {
                tops.push_back(m.vertex());
                m = syzygy(a, m);
            }
            if (static_cast<int>(tops.size()) != 2 * b.count + 1) { ok = false; return; }
            for (std::size_t idx = 0; idx < tops.size(); ++idx) {
                if (idx % 2 == 0) {
                    if (tops[idx] != 0) { ok = false; return; }
                } else {
                    std::size_t t = idx / 2;
                    int bt = (t == 0) ? 0 : b.bounce_points[t - 1];
                    if (tops[idx] != bt + 1) { ok = false; return; }
                }
            }
        });
        if (!ok) return false;
    }
    return true;
}

bool quiver_oracle() {
    for (int n = 1; n <= 8; ++n) {
        bool ok = true;
        for_each_cyclic(n, 2 * n + 2, [&](const KupischSeries& a) {
            if (!ok) return;
            bool via_quiver = finite_gldim_via_quiver(a);
            bool direct = !global_dimension(a).is_infinite();
            if (via_quiver != direct) { ok = false; return; }
            std::int64_t det = cartan_determinant(a);
            CycleReport r = cycle_report(a);
            if ((det != 0) != (r.component_count == 1)) { ok = false; return; }
            if (det != 0 && r.cycles[0].weight != Rational(det)) { ok = false; return; }
        });
        if (!ok) return false;
    }
    for (int n = 1; n <= 7; ++n)
        for (const auto& a : enumerate_cyclic_finite_gldim(n)) {
            CycleReport r = cycle_report(a);
            std::size_t on_cycle = 0;
            for (const auto& c : r.cycles) on_cycle += c.vertices.size();
            int even = even_pdim_simple_count(a);
            Rational m = magnitude(a);
            if (static_cast<long long>(on_cycle) != even) return false;
            if (m != Rational(even)) return false;
        }
    return true;
}

bool m1_characterisations() {
    auto has_unique_n = [](const KupischSeries& a) {
        return std::count(a.entries().begin(), a.entries().end(), a.size()) == 1;
    };
    bool ok = true;
    auto check = [&](const KupischSeries& a) {
        if (!ok) return;
        bool finite = !global_dimension(a).is_infinite();
        bool p1 = finite && magnitude_via_ext(a) == 1;
        bool p2 = has_unique_n(a);
        bool p3 = finite && loewy_length(a) >= a.size();
        if (p1 != p2 || p2 != p3) ok = false;
    };
    for (int n = 1; n <= 7 && ok; ++n) {
        for_each_linear_product(n, [&](const std::vector<int>& c) {
            check(KupischSeries::linear(c));
        });
        for_each_cyclic(n, 2 * n + 2, check);
    }
    if (!ok) return false;

    for (int n = 1; n <= 8; ++n) {
        std::int64_t count = 1; // the linear algebra [n,n-1,...,1]
        for_each_cyclic(n, 2 * n - 1, [&](const KupischSeries& a) {
            if (has_unique_n(a)) ++count;
        });
        if (count != catalan(n)) return false;
        // and the explicit bijection is a bijection: distinct paths,
        // round-trips on every Dyck path of semilength n
        if (n <= 7) {
            bool rt = true;
            for_each_dyck_path(n, [&](const DyckPath& d) {
                if (!rt) return;
                KupischSeries a = dyck_to_m1(d);
                if (!has_unique_n(a) || !(m1_to_dyck(a) == d)) rt = false;
            });
            if (!rt) return false;
        }
    }
    return true;
}

bool tree_pdim_oracle() {
    for (int n = 1; n <= 9; ++n) {
        bool ok = true;
        for_each_linear_product(n, [&](const std::vector<int>& c) {
            if (!ok) return;
            KupischSeries a = KupischSeries::linear(c);
            LabeledTree t = tau(a);
            for (int i = 0; i < n; ++i)
                if (pdim_via_tree(t, i) !=
                    projective_dimension(a, simple_module(a, i)).value()) {
                    ok = false;
                    return;
                }
        });
        if (!ok) return false;
    }
    return true;
}

bool decomposition_roundtrips() {
    for (int g = 0; g <= 6; ++g) {
        // paths of semilength <= 10 with height <= g+1
        for (int n = 0; n <= 10; ++n) {
            bool ok = true;
            for_each_dyck_path(n, [&](const DyckPath& d) {
                if (!ok || height(d) > g + 1) return;
                DyckDecomposition dec = decompose_bounded(d, g);
                int total = dec.middle.semilength();
                for (const auto& p : dec.left) total += p.semilength();
                for (const auto& p : dec.right) total += p.semilength();
                if (total != n - dec.m) { ok = false; return; }
                if (!(recompose_bounded(dec, g) == d)) ok = false;
            });
            if (!ok) return false;
        }
        // trees with <= 9 vertices satisfying the sibling bound
        for (int n = 0; n <= 8; ++n) {
            bool ok = true;
            for_each_dyck_path(n, [&](const DyckPath& d) {
                if (!ok) return;
                OrderedTree t = dyck_to_tree(d);
                if (!sibling_bound_check(t, g)) return;
                TreeDecomposition dec = decompose_tree_bounded(t, g);
                int vertices = dec.middle.vertex_count();
                for (const auto& p : dec.left) vertices += p.vertex_count();
                for (const auto& p : dec.right) vertices += p.vertex_count();
                if (vertices != (n + 1) + dec.m) { ok = false; return; }
                if (!(recompose_tree_bounded(dec) == t)) ok = false;
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool property_suites() {
    // Gustafson: finite gldim forces Loewy length <= 2n-1
    for (int n = 1; n <= 5; ++n) {
        bool ok = true;
        for_each_cyclic(n, 3 * n, [&](const KupischSeries& a) {
            if (ok && !global_dimension(a).is_infinite() && loewy_length(a) > 2 * n - 1)
                ok = false;
        });
        if (!ok) return false;
    }
    for (int n = 6; n <= 8; ++n) {
        bool ok = true;
        for_each_cyclic(n, 2 * n + 2, [&](const KupischSeries& a) {
            if (ok && !global_dimension(a).is_infinite() && loewy_length(a) > 2 * n - 1)
                ok = false;
        });
        if (!ok) return false;
    }

    // Madsen: finite gldim iff some simple has even projective dimension
    for (int n = 1; n <= 7; ++n) {
        bool ok = true;
        for_each_cyclic(n, 2 * n + 2, [&](const KupischSeries& a) {
            if (!ok) return;
            bool has_even = false;
            for (int i = 0; i < n; ++i) {
                HomDimension d = projective_dimension(a, simple_module(a, i));
                if (!d.is_infinite() && d.value() % 2 == 0) has_even = true;
            }
            if (has_even == global_dimension(a).is_infinite()) ok = false;
        });
        if (!ok) return false;
    }

    // parity: odd pdim iff all composition factors have odd pdim
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : enumerate_cyclic_finite_gldim(n)) {
            std::vector<bool> odd(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                odd[static_cast<std::size_t>(i)] =
                    projective_dimension(a, simple_module(a, i)).value() % 2 == 1;
            for (int i = 0; i < n; ++i)
                for (int k = 1; k <= a.c(i); ++k) {
                    UniserialModule m(a, i, k);
                    bool modd = projective_dimension(a, m).value() % 2 == 1;
                    bool all_odd = true;
                    for (int j : composition_factors(a, m))
                        if (!odd[static_cast<std::size_t>(j)]) all_odd = false;
                    if (modd != all_odd) return false;
                }
        }

    // gldim equals the maximal pdim of an indecomposable injective
    for (int n = 1; n <= 7; ++n) {
        bool ok = true;
        auto check = [&](const KupischSeries& a) {
            if (!ok || global_dimension(a).is_infinite()) return;
            int best = 0;
            for (int i = 0; i < n; ++i) {
                HomDimension d = projective_dimension(a, indecomposable_injective(a, i));
                if (d.is_infinite()) { ok = false; return; }
                best = std::max(best, d.value());
            }
            if (best != global_dimension(a).value()) ok = false;
        };
        for_each_linear_product(n, [&](const std::vector<int>& c) {
            check(KupischSeries::linear(c));
        });
        for (const auto& a : enumerate_cyclic_finite_gldim(n)) check(a);
        if (!ok) return false;
    }

    // bounce path stays weakly below the path; codec round-trips
    for (int n = 0; n <= 9; ++n) {
        bool ok = true;
        for_each_dyck_path(n, [&](const DyckPath& d) {
            if (!ok) return;
            auto h = d.levels();
            auto bh = bounce_levels(d);
            for (std::size_t x = 0; x < h.size(); ++x)
                if (bh[x] > h[x]) { ok = false; return; }
            if (!(from_area(area_sequence(d)) == d)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "worked examples", worked_examples);
    criterion(2, "equidistribution n <= 12", equidistribution);
    criterion(3, "sincere gldim = 2 * bounce, semilength <= 9", sincere_bounce);
    criterion(4, "resolution quiver oracle", quiver_oracle);
    criterion(5, "magnitude-one characterisations and count", m1_characterisations);
    criterion(6, "tree-distance pdim oracle n <= 9", tree_pdim_oracle);
    criterion(7, "decomposition round-trips", decomposition_roundtrips);
    criterion(8, "property suites", property_suites);
    return all_ok ? 0 : 1;
}
