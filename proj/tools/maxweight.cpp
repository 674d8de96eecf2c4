// Command-line surface of the tableau/weight-multiplicity engine:
// triangles, family enumeration and counting, bijections, the Lie-theory
// oracle and the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include "maxweight/affine.hpp"
#include "maxweight/formulas.hpp"
#include "maxweight/insertion.hpp"
#include "maxweight/lie.hpp"
#include "maxweight/paths.hpp"
#include "maxweight/rigid.hpp"
#include "maxweight/rs.hpp"
#include "maxweight/tableau.hpp"
#include "maxweight/youngwall.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace maxweight;
using nlohmann::json;

namespace {

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

BigInt family_count(const std::string& family, int m, int s, int k) {
    if (family == "sB") return BigInt((long long)enumerate_sB({m, s, k}).size());
    if (family == "sD") return BigInt((long long)enumerate_sD({m, s, k}).size());
    if (family == "parity0") return BigInt((long long)enumerate_parity(0, m, k).size());
    if (family == "parity1") return BigInt((long long)enumerate_parity(1, m, k).size());
    if (family == "motzkin") return motzkin_number(m, s);
    if (family == "riordan") return riordan_number(m, s);
    if (family == "catalan") return catalan_number(m, s);
    if (family == "pascal") return pascal_number(m, s);
    throw std::invalid_argument("unknown family " + family);
}

std::vector<StrictSeq> family_members(const std::string& family, int m, int s, int k) {
    if (family == "sB") return enumerate_sB({m, s, k});
    if (family == "sD") return enumerate_sD({m, s, k});
    if (family == "parity0" || family == "ae") {
        if (family == "ae") {
            std::vector<StrictSeq> out;
            for (const auto& t : enumerate_sD({m, 0, k})) out.push_back(t);
            return out;
        }
        return enumerate_parity(0, m, k);
    }
    if (family == "parity1") return enumerate_parity(1, m, k);
    if (family == "parity") {
        auto all = enumerate_parity(0, m, k);
        auto odd = enumerate_parity(1, m, k);
        all.insert(all.end(), odd.begin(), odd.end());
        return all;
    }
    throw std::invalid_argument("family must be one of sB, sD, parity, ae");
}

json tableau_record(const StrictSeq& seq, int shift) {
    Tableau t = tableau_from_strict_sequence(seq, shift);
    json rec;
    rec["outer"] = t.shape.outer.parts;
    rec["inner"] = t.shape.inner.parts;
    rec["rows"] = t.rows;
    return rec;
}

TriangleTable::Kind parse_kind(const std::string& name) {
    if (name == "motzkin") return TriangleTable::Kind::Motzkin;
    if (name == "riordan") return TriangleTable::Kind::Riordan;
    if (name == "catalan") return TriangleTable::Kind::Catalan;
    if (name == "pascal") return TriangleTable::Kind::Pascal;
    if (name == "bessel") return TriangleTable::Kind::Bessel;
    throw std::invalid_argument("unknown triangle kind " + name);
}

// ---- verification suites ---------------------------------------------

bool suite_level2(int max_m, std::ostream& os) {
    bool ok = true;
    for (int m = 0; m <= max_m; ++m)
        for (int s = 0; s <= m; ++s)
            if (sB2(m, s) != BigInt((long long)enumerate_sB({m, s, 2}).size())) {
                os << "  sB2 mismatch at (" << m << "," << s << ")\n";
                ok = false;
            }
    for (int u = 0; 2 * u - 1 <= max_m; ++u)
        for (int s = 0; 2 * u - 1 + s <= max_m; ++s) {
            int cells = 2 * u - 1 + s;
            if (cells < 0) continue;
            if (sD2_u(u, s) != BigInt((long long)enumerate_sD({cells, s, 2}).size())) {
                os << "  sD2 mismatch at (u=" << u << ",s=" << s << ")\n";
                ok = false;
            }
        }
    return ok;
}

bool suite_level3(int max_m, std::ostream& os) {
    bool ok = true;
    for (int m = 0; m <= max_m; ++m) {
        for (int s = 0; s <= m; ++s) {
            BigInt enumerated((long long)enumerate_sB({m, s, 3}).size());
            if (enumerated != motzkin_number(m, s) || sB3(m, s) != enumerated) {
                os << "  sB3 mismatch at (" << m << "," << s << ")\n";
                ok = false;
            }
            if (m >= 1) {
                auto split = partition_level3(m, s);
                size_t total = split.via_row1.size() + split.via_row3.size() + split.via_jdt.size();
                if (BigInt((long long)total) != enumerated) {
                    os << "  jeu-de-taquin split mismatch at (" << m << "," << s << ")\n";
                    ok = false;
                }
            }
        }
        for (int s = 0; s <= m + 1; ++s)
            if (sD3(m, s) != BigInt((long long)enumerate_sD({m, s, 3}).size())) {
                os << "  sD3 mismatch at (" << m << "," << s << ")\n";
                ok = false;
            }
    }
    return ok;
}

bool suite_limits(int max_m, std::ostream& os) {
    bool ok = true;
    for (int m = 0; m <= max_m; ++m) {
        for (int s = 0; s <= m; ++s) {
            int k = stabilization_bound(m, s, StableFamily::RigidB);
            if (sB_infty(m, s) != BigInt((long long)enumerate_sB({m, s, k}).size())) {
                os << "  sB limit mismatch at (" << m << "," << s << ")\n";
                ok = false;
            }
        }
        for (int s = 0; s <= m + 1; ++s) {
            int k = stabilization_bound(m, s, StableFamily::SpinRigidD);
            if (sD_infty(m, s) != BigInt((long long)enumerate_sD({m, s, k}).size())) {
                os << "  sD limit mismatch at (" << m << "," << s << ")\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool suite_selberg(int max_m, std::ostream& os) {
    bool ok = true;
    for (int k = 1; k <= 6; ++k)
        for (int m = 0; m <= max_m; ++m) {
            BigInt oracle = 0;
            for (const Partition& lam : partitions_of(m, k))
                oracle += count_syt(SkewShape{lam, Partition()});
            if (selberg(m, k) != oracle) {
                os << "  selberg mismatch at (m=" << m << ",k=" << k << ")\n";
                ok = false;
            }
        }
    return ok;
}

bool suite_skt(int max_m, std::ostream& os) {
    bool ok = true;
    for (int k = 0; k <= 5; ++k)
        for (int t = 0; t <= k; ++t)
            for (int m = 0; m <= max_m; ++m) {
                BigInt oracle = 0;
                for (const Partition& lam : partitions_of(m, k)) {
                    int odd = 0;
                    for (int p : lam.parts) odd += p & 1;
                    if (odd == t) oracle += count_syt(SkewShape{lam, Partition()});
                }
                if (k == 0 && m > 0) oracle = 0;
                if (s_kt(m, k, t) != oracle) {
                    os << "  s_kt mismatch at (m=" << m << ",k=" << k << ",t=" << t << ")\n";
                    ok = false;
                }
            }
    return ok;
}

bool suite_crystal(int, std::ostream& os) {
    bool ok = true;
    for (int n = 3; n <= 4; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int m = 0; m <= std::min(n, 4); ++m)
                for (int s = 0; s <= std::min(m, n - 1); ++s)
                    if (connected_component_count(n, k, s, m) !=
                        BigInt((long long)enumerate_sB({m, s, k}).size())) {
                        os << "  component count mismatch at (n=" << n << ",k=" << k << ",s=" << s
                           << ",m=" << m << ")\n";
                        ok = false;
                    }
    return ok;
}

bool suite_affine(int, std::ostream& os) {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
        for (int s = 0; s <= n; ++s) {
            std::vector<long long> lam(n + 1, 0);
            if (s == 0)
                lam[0] = 2;
            else if (s == 1)
                lam[0] = lam[1] = 1;
            else if (s == n)
                lam[n] = 2;
            else
                lam[s] = 1;
            if (affine_kac_enumerate(n, lam, 2).size() != static_cast<size_t>(n + 2)) {
                os << "  level-2 count mismatch at (n=" << n << ",s=" << s << ")\n";
                ok = false;
            }
        }
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 3; ++k)
            for (int m = 0; m <= n; ++m)
                for (int s = 0; s <= m; ++s) {
                    if (!verify_rigid_multiplicity(n, k, s, m).ok) {
                        os << "  rigid multiplicity mismatch at (n=" << n << ",k=" << k
                           << ",s=" << s << ",m=" << m << ")\n";
                        ok = false;
                    }
                    if (n >= 3 && m <= n - 1 && s <= m + 1 &&
                        !(k == 2 && (m % 2) == (s % 2)) &&
                        !verify_spin_multiplicity(n, k, s, m).ok) {
                        os << "  spin multiplicity mismatch at (n=" << n << ",k=" << k
                           << ",s=" << s << ",m=" << m << ")\n";
                        ok = false;
                    }
                }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigid Young tableau and weight multiplicity engine"};
    app.require_subcommand(1);

    // triangle
    std::string tri_kind = "motzkin", tri_format = "csv";
    int tri_rows = 7;
    auto* tri = app.add_subcommand("triangle", "print a triangular array");
    tri->add_option("--kind", tri_kind, "motzkin|riordan|catalan|pascal|bessel");
    tri->add_option("--rows", tri_rows, "number of columns m = 0..rows-1");
    tri->add_option("--format", tri_format, "csv|json");

    // count
    std::string cnt_family = "sB";
    int cnt_m = 0, cnt_s = 0, cnt_k = 2;
    auto* cnt = app.add_subcommand("count", "count a family");
    cnt->add_option("--family", cnt_family, "sB|sD|parity0|parity1|motzkin|riordan|catalan|pascal");
    cnt->add_option("--m", cnt_m)->required();
    cnt->add_option("--s", cnt_s);
    cnt->add_option("--k", cnt_k);

    // enumerate
    std::string enum_family = "sB";
    int enum_m = 0, enum_s = 0, enum_k = 2;
    auto* enm = app.add_subcommand("enumerate", "list the members of a family");
    enm->add_option("--family", enum_family, "sB|sD|parity|parity0|parity1|ae");
    enm->add_option("--m", enum_m)->required();
    enm->add_option("--s", enum_s);
    enm->add_option("--k", enum_k);

    // export
    std::string exp_family = "sB", exp_path;
    int exp_m = 0, exp_s = 0, exp_k = 2;
    auto* exp = app.add_subcommand("export", "write a family to a JSON file");
    exp->add_option("--family", exp_family, "sB|sD|parity|ae");
    exp->add_option("--m", exp_m)->required();
    exp->add_option("--s", exp_s);
    exp->add_option("--k", exp_k);
    exp->add_option("--out", exp_path)->required();

    // biject
    std::string bij_family = "sB3";
    int bij_m = 0, bij_s = 0;
    auto* bij = app.add_subcommand("biject", "print the tableau-to-path bijection");
    bij->add_option("--family", bij_family, "sB3 (Motzkin paths) | sB2 (two-step paths)");
    bij->add_option("--m", bij_m)->required();
    bij->add_option("--s", bij_s);

    // oracle
    std::string orc_type = "B";
    int orc_rank = 3;
    std::vector<long long> orc_lambda, orc_mu;
    auto* orc = app.add_subcommand("oracle", "Freudenthal weight multiplicity");
    orc->add_option("--type", orc_type, "A|B|C|D");
    orc->add_option("--rank", orc_rank)->required();
    orc->add_option("--lambda", orc_lambda, "fundamental coordinates")->required();
    orc->add_option("--mu", orc_mu, "fundamental coordinates")->required();

    // verify
    std::string ver_suite = "all";
    int ver_max_m = 9;
    double budget = 600.0;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", ver_suite, "level2|level3|limits|selberg|skt|crystal|affine|all");
    ver->add_option("--max-m", ver_max_m);
    ver->add_option("--budget-seconds", budget);
    bool ver_all = false;
    ver->add_flag("--all", ver_all, "run every suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tri->parsed()) {
            TriangleTable table = TriangleTable::build(parse_kind(tri_kind), tri_rows);
            int smax = tri_kind == "bessel" ? tri_rows : tri_rows - 1;
            if (tri_format == "csv") {
                std::cout << "s\\m";
                for (int m = 0; m < tri_rows; ++m) std::cout << "," << m;
                std::cout << "\n";
                for (int s = smax; s >= 0; --s) {
                    std::cout << s;
                    for (int m = 0; m < tri_rows; ++m) {
                        auto it = table.entries.find({m, s});
                        std::cout << ",";
                        if (it != table.entries.end()) std::cout << it->second.to_string();
                    }
                    std::cout << "\n";
                }
            } else if (tri_format == "json") {
                json out;
                out["kind"] = tri_kind;
                for (const auto& [key, value] : table.entries)
                    out["entries"].push_back(
                        {{"m", key.first}, {"s", key.second}, {"value", value.to_string()}});
                std::cout << out.dump(2) << "\n";
            } else {
                return usage_error("unknown format " + tri_format);
            }
            return 0;
        }

        if (cnt->parsed()) {
            std::cout << family_count(cnt_family, cnt_m, cnt_s, cnt_k).to_string() << "\n";
            return 0;
        }

        if (enm->parsed()) {
            for (const auto& seq : family_members(enum_family, enum_m, enum_s, enum_k)) {
                int shift = enum_family == "sB" || enum_family == "sD" ? enum_s : 0;
                std::cout << tableau_from_strict_sequence(seq, shift).to_string() << "\n";
            }
            return 0;
        }

        if (exp->parsed()) {
            json out;
            out["family"] = exp_family;
            out["m"] = exp_m;
            out["s"] = exp_s;
            out["k"] = exp_k;
            out["tableaux"] = json::array();
            int shift = exp_family == "sB" || exp_family == "sD" ? exp_s : 0;
            for (const auto& seq : family_members(exp_family, exp_m, exp_s, exp_k))
                out["tableaux"].push_back(tableau_record(seq, shift));
            std::ofstream file(exp_path);
            if (!file) return usage_error("cannot open " + exp_path + " for writing");
            file << out.dump(2) << "\n";
            if (!file.good()) return usage_error("write failed for " + exp_path);
            return 0;
        }

        if (bij->parsed()) {
            if (bij_family == "sB3") {
                for (const auto& seq : enumerate_sB({bij_m, bij_s, 3}))
                    std::cout << tableau_from_strict_sequence(seq, bij_s).to_string() << "  ->  "
                              << tableau_to_motzkin(seq).to_string() << "\n";
            } else if (bij_family == "sB2") {
                for (const auto& seq : enumerate_sB({bij_m, bij_s, 2}))
                    std::cout << tableau_from_strict_sequence(seq, bij_s).to_string() << "  ->  "
                              << tableau_to_pascal_path(seq).to_string() << "\n";
            } else {
                return usage_error("biject supports sB3 and sB2");
            }
            return 0;
        }

        if (orc->parsed()) {
            Family fam;
            switch (orc_type.empty() ? 'B' : orc_type[0]) {
                case 'A': fam = Family::A; break;
                case 'B': fam = Family::B; break;
                case 'C': fam = Family::C; break;
                case 'D': fam = Family::D; break;
                default: return usage_error("type must be A, B, C or D");
            }
            CartanData cartan = CartanData::build(fam, orc_rank);
            std::cout << freudenthal(cartan, orc_lambda, orc_mu).to_string() << "\n";
            return 0;
        }

        if (ver->parsed()) {
            using Suite = bool (*)(int, std::ostream&);
            std::vector<std::pair<std::string, Suite>> suites = {
                {"level2", suite_level2}, {"level3", suite_level3}, {"limits", suite_limits},
                {"selberg", suite_selberg}, {"skt", suite_skt}, {"crystal", suite_crystal},
                {"affine", suite_affine},
            };
            bool all = ver_all || ver_suite == "all";
            auto start = std::chrono::steady_clock::now();
            bool ok = true;
            bool ran = false;
            for (const auto& [name, run] : suites) {
                if (!all && name != ver_suite) continue;
                double elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                if (elapsed > budget) {
                    std::cout << "skipped " << name << " (budget exhausted)\n";
                    continue;
                }
                ran = true;
                bool good = run(ver_max_m, std::cout);
                std::cout << (good ? "ok" : "FAILED") << " " << name << "\n";
                ok = ok && good;
            }
            if (!ran) return usage_error("unknown suite " + ver_suite);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return usage_error("no command given");
}
