// Command-line surface: ingestion, verification, classification, Galois
// computation and brute-force cross-checks, with deterministic output.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "extalg/json_io.hpp"
#include "extalg/sampling.hpp"

using namespace extalg;

namespace {

struct Options {
    std::string format = "human";
    int jobs = 1;
    unsigned long long seed = 1;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("UsageError", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const Options& opt, const json& doc, const std::string& human) {
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

/// Basis spec: comma-separated tokens; "1" is the unit, "e<k>" a basis
/// vector, "x"/"y"/"z" alias e1/e2/e3, and "c0:c1:..." an explicit vector.
Mat parse_basis(const Algebra& A, const std::string& spec) {
    const Field& F = *A.F;
    std::vector<Vec> rows;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "1") {
            rows.push_back(A.unit);
        } else if (tok == "x" || tok == "y" || tok == "z" || tok[0] == 'e') {
            int idx = tok == "x" ? 1 : tok == "y" ? 2 : tok == "z" ? 3 : std::atoi(tok.c_str() + 1);
            if (idx < 0 || idx >= A.dim) fail("UsageError", "basis index out of range: " + tok);
            Vec v = vec_zero(A.dim);
            v[idx] = F.one();
            rows.push_back(v);
        } else if (tok.find(':') != std::string::npos) {
            Vec v;
            std::stringstream vs(tok);
            std::string c;
            while (std::getline(vs, c, ':')) v.push_back(F.parse_element(c));
            if ((int)v.size() != A.dim) fail("UsageError", "vector length mismatch: " + tok);
            rows.push_back(v);
        } else {
            fail("UsageError", "cannot parse basis token '" + tok + "'");
        }
    }
    return Mat::from_rows(rows);
}

/// Default retraction onto the span: projection along the echelon complement.
std::pair<ExtendingDatum, Mat> datum_via_default_retraction(const Algebra& B, const Mat& a_rows) {
    const Field& F = *B.F;
    Mat ech = row_space(F, a_rows);
    Mat comp = complement_rows(F, ech, B.dim);
    Mat Bt(B.dim, B.dim);
    for (int j = 0; j < ech.rows; ++j)
        for (int i = 0; i < B.dim; ++i) Bt.at(i, j) = ech.at(j, i);
    for (int j = 0; j < comp.rows; ++j)
        for (int i = 0; i < B.dim; ++i) Bt.at(i, j + ech.rows) = comp.at(j, i);
    Mat Bi = *inverse(F, Bt);
    Mat p(ech.rows, B.dim);
    for (int i = 0; i < ech.rows; ++i) p.set_row(i, Bi.row(i));
    return datum_from_retraction(B, ech, p);
}

std::optional<FlagDatum> flag_from_datum(const ExtendingDatum& D) {
    if (D.vdim != 1) return std::nullopt;
    int n = D.adim();
    FlagDatum fd;
    fd.Lambda = Vec(n);
    fd.lambda = Vec(n);
    fd.D = Mat(n, n);
    fd.d = Mat(n, n);
    for (int a = 0; a < n; ++a) {
        fd.Lambda[a] = D.lact.value(0, a)[0];
        fd.lambda[a] = D.rhar.value(a, 0)[0];
        Vec Dc = D.ract.value(0, a);
        Vec dc = D.lhar.value(a, 0);
        for (int i = 0; i < n; ++i) {
            fd.D.at(i, a) = Dc[i];
            fd.d.at(i, a) = dc[i];
        }
    }
    fd.a0 = D.cocycle.value(0, 0);
    fd.u = D.vmult.value(0, 0)[0];
    return fd;
}

int cmd_verify(const Options& opt, const std::string& algebra_path, const std::string& datum_path,
               const std::string& mp_path, const std::string& comm_path) {
    if (!algebra_path.empty()) {
        Algebra A = algebra_from_json(load_json(algebra_path));
        ValidationReport rep = validate(A);
        json j{{"kind", "algebra"}, {"valid", rep.ok()}, {"issues", rep.summary()}};
        emit(opt, j, std::string("algebra: ") + (rep.ok() ? "valid" : rep.summary()) + "\n");
        return rep.ok() ? 0 : 1;
    }
    if (!datum_path.empty()) {
        ExtendingDatum D = datum_from_json(load_json(datum_path));
        AxiomReport rep = check_axioms(D);
        json ax = json::array();
        for (size_t i = 0; i < rep.axiom.size(); ++i)
            ax.push_back(json{{"axiom", "A" + std::to_string(i + 1)},
                              {"ok", rep.axiom[i].ok},
                              {"witness", rep.axiom[i].witness}});
        json j{{"kind", "extending-datum"},
               {"normalized", rep.normalization.ok},
               {"axioms", ax},
               {"valid", rep.all_ok()}};
        if (rep.all_ok()) {
            j["special"] = classify_special(D);
            emit(opt, j, "datum: all axioms pass\n");
            return 0;
        }
        emit(opt, j, "datum: FAIL " + rep.first_failure() + "\n");
        return 1;
    }
    if (!mp_path.empty()) {
        MatchedPair mp = matched_pair_from_json(load_json(mp_path));
        ConditionReport rep = matched_pair_check(mp);
        json conds = json::array();
        for (const auto& e : rep.entries)
            conds.push_back(json{{"name", e.name}, {"ok", e.ok}, {"witness", e.witness}});
        emit(opt, json{{"kind", "matched-pair"}, {"conditions", conds}, {"valid", rep.all_ok()}},
             std::string("matched pair: ") + (rep.all_ok() ? "valid" : "FAIL " + rep.first_failure()) +
                 "\n");
        return rep.all_ok() ? 0 : 1;
    }
    if (!comm_path.empty()) {
        json doc = load_json(comm_path);
        Algebra A = algebra_from_json(doc.at("algebra"));
        int m = doc.at("vdim").get<int>();
        CommutativeDatum D;
        D.A = A;
        D.vdim = m;
        const Field& F = *A.F;
        auto bl = [&](const char* key, int l, int r, int c) {
            BilinearMap B(l, r, c);
            const json& jj = doc.at(key);
            for (int i = 0; i < l; ++i)
                for (int k = 0; k < r; ++k) B.set_value(i, k, vec_from_json(F, jj[i][k]));
            return B;
        };
        D.lact = bl("lact", m, A.dim, m);
        D.ract = bl("ract", m, A.dim, A.dim);
        D.cocycle = bl("cocycle", m, m, A.dim);
        D.vmult = bl("vmult", m, m, m);
        ConditionReport rep = commutative_check(D);
        json conds = json::array();
        for (const auto& e : rep.entries)
            conds.push_back(json{{"name", e.name}, {"ok", e.ok}, {"witness", e.witness}});
        emit(opt, json{{"kind", "commutative-datum"}, {"conditions", conds}, {"valid", rep.all_ok()}},
             std::string("commutative datum: ") +
                 (rep.all_ok() ? "valid" : "FAIL " + rep.first_failure()) + "\n");
        return rep.all_ok() ? 0 : 1;
    }
    fail("UsageError", "verify needs --algebra, --datum, --matched-pair or --commutative");
}

int cmd_product(const Options& opt, const std::string& type, const std::string& input) {
    json doc = load_json(input);
    Algebra P;
    if (type == "unified") {
        P = unified_product(datum_from_json(doc));
    } else if (type == "bicrossed") {
        P = bicrossed_product(matched_pair_from_json(doc));
    } else if (type == "crossed") {
        CrossedProductInput in = crossed_input_from_json(doc);
        P = crossed_product(in.A, in.G, in.action, in.cocycle);
    } else {
        fail("UsageError", "unknown product type '" + type + "'");
    }
    emit(opt, algebra_to_json(P),
         "product of dimension " + std::to_string(P.dim) + " built; rerun with --format json\n");
    return 0;
}

int cmd_factorize(const Options& opt, const std::string& algebra_path, const std::string& aspec,
                  const std::string& vspec) {
    Algebra E = algebra_from_json(load_json(algebra_path));
    MatchedPair mp = factorize(E, parse_basis(E, aspec), parse_basis(E, vspec));
    emit(opt, matched_pair_to_json(mp),
         "factorization found: dim(A) = " + std::to_string(mp.A.dim) +
             ", dim(V) = " + std::to_string(mp.vdim) + "\n");
    return 0;
}

int cmd_flag_enum(const Options& opt, const std::string& base_path) {
    Algebra A = algebra_from_json(load_json(base_path));
    auto datums = enumerate_flag_datums(A);
    json out{{"base", algebra_to_json(A)}, {"count", datums.size()}};
    json arr = json::array();
    for (const auto& fd : datums) arr.push_back(flag_datum_to_json(*A.F, fd));
    out["datums"] = arr;
    emit(opt, out, "flag datums: " + std::to_string(datums.size()) + "\n");
    return 0;
}

int cmd_classify(const Options& opt, const std::string& base_path, const std::string& mode_str,
                 const std::string& expect_field) {
    Algebra A = algebra_from_json(load_json(base_path));
    if (!expect_field.empty() && !A.F->same(*Field::parse(expect_field)))
        fail("UsageError", "base algebra is over " + A.F->spec_string() + ", not " + expect_field);
    EquivMode mode = mode_str == "cohomologous" ? EquivMode::Cohomologous : EquivMode::Equivalent;
    ClassifiedFamily fam = classify_codim1(A, mode);
    const Field& F = *A.F;
    json classes = json::array();
    for (int c = 0; c < fam.class_count(); ++c) {
        long long size = 0;
        for (int cls : fam.class_of)
            if (cls == c) ++size;
        classes.push_back(json{{"representative", flag_datum_to_json(F, fam.datums[fam.representative[c]])},
                               {"size", size},
                               {"extension", algebra_to_json(flag_extension(A, fam.datums[fam.representative[c]]))}});
    }
    json wit = json::array();
    for (size_t i = 0; i < fam.datums.size(); ++i)
        wit.push_back(json{{"datum", (int)i},
                           {"class", fam.class_of[i]},
                           {"q", F.to_string(fam.witness[i].first)},
                           {"alpha", vec_to_json(F, fam.witness[i].second)}});
    json out{{"base", algebra_to_json(A)},
             {"mode", mode_str},
             {"datum_count", fam.datums.size()},
             {"class_count", fam.class_count()},
             {"classes", classes},
             {"witnesses", wit}};
    std::ostringstream os;
    os << "datums: " << fam.datums.size() << ", classes (" << mode_str << "): " << fam.class_count()
       << "\n";
    emit(opt, out, os.str());
    return 0;
}

int cmd_supersolvable(const Options& opt, const std::string& field, int dim) {
    auto F = Field::parse(field);
    auto cat = supersolvable_catalog(F, dim);
    json arr = json::array();
    for (const Algebra& A : cat) arr.push_back(algebra_to_json(A));
    emit(opt, json{{"field", field}, {"dim", dim}, {"count", cat.size()}, {"algebras", arr}},
         "supersolvable algebras of dimension " + std::to_string(dim) + ": " +
             std::to_string(cat.size()) + " classes\n");
    return 0;
}

int cmd_catalog(const Options& opt, const std::string& field, int dim, bool check, int jobs) {
    auto F = Field::parse(field);
    std::vector<CatalogEntry> entries = dim == 2 ? catalog_dim2(F) : catalog_dim3(F);
    json arr = json::array();
    std::ostringstream os;
    for (const auto& e : entries) {
        json je{{"name", e.name}, {"presentation", e.presentation},
                {"algebra", algebra_to_json(e.algebra)}};
        if (e.family) je["family"] = true;
        if (!e.note.empty()) je["note"] = e.note;
        arr.push_back(je);
        os << e.name << ":  " << e.presentation;
        if (!e.note.empty()) os << "   [" << e.note << "]";
        os << "\n";
    }
    json out{{"field", field}, {"dim", dim}, {"count", entries.size()}, {"entries", arr}};
    bool pass = true;
    if (check) {
        if (!F->finite()) fail("UsageError", "--check needs a finite field");
        EnumerationTask task{F, dim};
        task.require_supersolvable = true;
        task.threads = jobs;
        auto found = enumerate_algebras(task);
        auto classes = iso_classes(found);
        // every enumerated class must meet the catalog, and conversely
        long long missed = 0;
        for (int rep : classes.representative) {
            bool hit = false;
            for (const auto& e : entries)
                if (find_isomorphism(found[rep], e.algebra)) hit = true;
            if (!hit) ++missed;
        }
        long long spurious = 0;
        for (const auto& e : entries) {
            bool hit = false;
            for (int rep : classes.representative)
                if (find_isomorphism(e.algebra, found[rep])) hit = true;
            if (!hit) ++spurious;
        }
        pass = missed == 0 && spurious == 0;
        out["check"] = json{{"enumerated_classes", classes.count()},
                            {"catalog_entries", entries.size()},
                            {"classes_missing_from_catalog", missed},
                            {"catalog_entries_not_realized", spurious},
                            {"pass", pass}};
        os << "oracle cross-check: " << (pass ? "PASS" : "FAIL") << " ("
           << classes.count() << " enumerated classes)\n";
    }
    emit(opt, out, os.str());
    return pass ? 0 : 1;
}

int cmd_galois(const Options& opt, const std::string& algebra_path, const std::string& sub,
               const std::string& method, const std::string& expect_field) {
    Algebra B = algebra_from_json(load_json(algebra_path));
    if (!expect_field.empty() && !B.F->same(*Field::parse(expect_field)))
        fail("UsageError", "algebra is over " + B.F->spec_string() + ", not " + expect_field);
    const Field& F = *B.F;
    Mat a_rows = parse_basis(B, sub);
    json out;
    std::ostringstream os;
    std::optional<int> order_brute, order_unified, order_codim1;
    if (method == "brute" || method == "all") {
        FiniteGroup G = galois_group_brute(B, a_rows);
        auto inv = invariants_and_galois_test(B, a_rows);
        order_brute = G.order();
        out["brute"] = group_to_json(F, G);
        out["is_galois"] = inv.is_galois;
        out["fixed_subalgebra"] = mat_to_json(F, inv.fixed_rows);
        os << "brute: order " << G.order() << (G.abelian() ? ", abelian" : ", nonabelian");
        if (!G.iso_hint().empty()) os << " (" << G.iso_hint() << ")";
        os << "; Galois extension: " << (inv.is_galois ? "yes" : "no") << "\n";
    }
    if (method == "unified" || method == "all") {
        auto [D, phi] = datum_via_default_retraction(B, a_rows);
        auto ug = galois_group_unified(D);
        order_unified = ug.group.order();
        json jg = group_to_json(F, ug.group);
        for (size_t i = 0; i < ug.pairs.size(); ++i) {
            jg["elements"][i]["r"] = mat_to_json(F, ug.pairs[i].r);
            jg["elements"][i]["sigma"] = mat_to_json(F, ug.pairs[i].sigma);
        }
        out["unified"] = jg;
        auto H = stabilizing_costabilizing_subgroup(D);
        out["costabilizing_subgroup_order"] = H.group.order();
        os << "unified pairs (r, sigma): order " << ug.group.order()
           << "; co-stabilizing subgroup: order " << H.group.order() << "\n";
    }
    if (method == "codim1" || method == "all") {
        Mat ech = row_space(F, a_rows);
        if (B.dim - ech.rows != 1) {
            if (method == "codim1") fail("UsageError", "codim1 method needs codimension 1");
        } else {
            auto [D, phi] = datum_via_default_retraction(B, a_rows);
            auto fd = flag_from_datum(D);
            Algebra A = subalgebra_restrict(B, ech);
            auto cg = galois_group_codim1(A, *fd);
            order_codim1 = cg.group.order();
            json jg = group_to_json(F, cg.group);
            for (size_t i = 0; i < cg.pairs.size(); ++i) {
                jg["elements"][i]["alpha"] = vec_to_json(F, cg.pairs[i].first);
                jg["elements"][i]["q"] = F.to_string(cg.pairs[i].second);
            }
            out["codim1"] = jg;
            os << "codim1 pairs (alpha, q): order " << cg.group.order() << "\n";
        }
    }
    bool agree = true;
    if (order_brute && order_unified && *order_brute != *order_unified) agree = false;
    if (order_brute && order_codim1 && *order_brute != *order_codim1) agree = false;
    if (method == "all") {
        out["methods_agree"] = agree;
        os << "methods agree: " << (agree ? "yes" : "NO") << "\n";
    }
    emit(opt, out, os.str());
    return agree ? 0 : 1;
}

int cmd_oracle(const Options& opt, const std::string& field, int dim, bool supersolvable,
               bool commutative, const std::string& contains_path,
               const std::string& extensions_of, long long budget, int jobs) {
    auto F = Field::parse(field);
    if (!extensions_of.empty()) {
        Algebra A = algebra_from_json(load_json(extensions_of));
        auto ext = brute_extensions_codim1(A, budget);
        json classes = json::array();
        for (size_t c = 0; c < ext.representatives.size(); ++c)
            classes.push_back(json{{"representative", algebra_to_json(ext.representatives[c])},
                                   {"size", ext.class_size[c]}});
        json out{{"field", field},
                 {"dim", A.dim + 1},
                 {"total_tables", ext.total_tables},
                 {"valid", ext.valid},
                 {"classes", classes}};
        emit(opt, out,
             "extensions: " + std::to_string(ext.valid) + " valid tables, " +
                 std::to_string(ext.representatives.size()) + " classes up to stabilizing isomorphism\n");
        return 0;
    }
    EnumerationTask task{F, dim};
    task.require_supersolvable = supersolvable;
    task.require_commutative = commutative;
    task.budget = budget;
    task.threads = jobs;
    if (!contains_path.empty()) task.contains = algebra_from_json(load_json(contains_path));
    auto found = enumerate_algebras(task);
    auto classes = iso_classes(found);
    json jc = json::array();
    for (int c = 0; c < classes.count(); ++c)
        jc.push_back(json{{"representative", algebra_to_json(found[classes.representative[c]])},
                          {"size", classes.class_size[c]}});
    json out{{"field", field},
             {"dim", dim},
             {"total_tables", task.candidate_count()},
             {"valid", found.size()},
             {"classes", jc}};
    emit(opt, out,
         "tables: " + std::to_string(found.size()) + " valid, " + std::to_string(classes.count()) +
             " isomorphism classes\n");
    return 0;
}

int cmd_propcheck(const Options& opt, const std::string& suite, int n, const std::string& field,
                  int dim_a, int vdim) {
    auto F = Field::parse(field);
    Rng rng(opt.seed);
    long long checked = 0, discrepancies = 0, positives = 0;
    std::vector<Algebra> pool;
    for (int i = 0; i < 6; ++i) pool.push_back(random_valid_algebra(F, dim_a, rng));
    for (int iter = 0; iter < n; ++iter) {
        const Algebra& A = pool[rng() % pool.size()];
        if (suite == "axioms") {
            ExtendingDatum D;
            int style = (int)(rng() % 3);
            if (style == 0) D = random_normalized_datum(A, vdim, rng);
            else {
                auto s = random_structured_datum(A, vdim, rng);
                if (!s) continue;
                D = *s;
                if (style == 2) perturb_datum(D, rng);
            }
            bool ax = check_axioms(D).all_ok();
            bool direct = is_associative_unital(unified_product_raw(D));
            if (ax != direct) ++discrepancies;
            if (ax) ++positives;
            ++checked;
        } else if (suite == "morphism") {
            auto s1 = random_structured_datum(A, vdim, rng);
            auto s2 = random_structured_datum(A, vdim, rng);
            if (!s1 || !s2) continue;
            MorphismPair pair{Mat(A.dim, vdim), Mat(vdim, vdim)};
            for (Fel& x : pair.r.a) x = random_fel(*F, rng);
            for (Fel& x : pair.v.a) x = random_fel(*F, rng);
            bool cond = morphism_check(*s1, *s2, pair);
            Mat psi = morphism_matrix(*s1, pair);
            Algebra P1 = unified_product_raw(*s1), P2 = unified_product_raw(*s2);
            bool direct = true;
            std::vector<Vec> basis(P1.dim, vec_zero(P1.dim));
            for (int i = 0; i < P1.dim; ++i) basis[i][i] = F->one();
            for (int i = 0; i < P1.dim && direct; ++i)
                for (int j = 0; j < P1.dim; ++j)
                    if (mat_apply(*F, psi, P1.mul(basis[i], basis[j])) !=
                        P2.mul(mat_apply(*F, psi, basis[i]), mat_apply(*F, psi, basis[j]))) {
                        direct = false;
                        break;
                    }
            if (cond != direct) ++discrepancies;
            if (cond) ++positives;
            ++checked;
        } else if (suite == "commutative") {
            if (!A.is_commutative()) continue;
            CommutativeDatum D;
            D.A = A;
            D.vdim = vdim;
            D.lact = BilinearMap(vdim, A.dim, vdim);
            D.ract = BilinearMap(vdim, A.dim, A.dim);
            D.cocycle = BilinearMap(vdim, vdim, A.dim);
            D.vmult = BilinearMap(vdim, vdim, vdim);
            for (int x = 0; x < vdim; ++x)
                for (int a = 0; a < A.dim; ++a) {
                    D.lact.set_value(x, a, random_vec(*F, vdim, rng));
                    D.ract.set_value(x, a, random_vec(*F, A.dim, rng));
                }
            for (int x = 0; x < vdim; ++x) {
                Vec ex = vec_zero(vdim);
                ex[x] = F->one();
                D.lact.set_value(x, 0, ex);
                D.ract.set_value(x, 0, vec_zero(A.dim));
            }
            for (int x = 0; x < vdim; ++x)
                for (int y = x; y < vdim; ++y) {
                    Vec f = random_vec(*F, A.dim, rng), v = random_vec(*F, vdim, rng);
                    D.cocycle.set_value(x, y, f);
                    D.cocycle.set_value(y, x, f);
                    D.vmult.set_value(x, y, v);
                    D.vmult.set_value(y, x, v);
                }
            bool ca = commutative_check(D).all_ok();
            ExtendingDatum full = expand_commutative(D);
            bool ax = check_axioms(full).all_ok();
            Algebra raw = unified_product_raw(full);
            bool commutative_algebra = is_associative_unital(raw) && raw.is_commutative();
            if (ca != ax || ax != commutative_algebra) ++discrepancies;
            if (ca) ++positives;
            ++checked;
        } else {
            fail("UsageError", "unknown suite '" + suite + "'");
        }
    }
    json out{{"suite", suite},     {"requested", n},         {"checked", checked},
             {"positives", positives}, {"discrepancies", discrepancies}, {"seed", opt.seed}};
    emit(opt, out,
         suite + ": " + std::to_string(checked) + " checked, " + std::to_string(positives) +
             " positive, " + std::to_string(discrepancies) + " discrepancies\n");
    return discrepancies == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unified products, flag classifications and Galois groups"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("EXTALG_JOBS")) opt.jobs = std::max(1, std::atoi(env));
    app.add_option("--format", opt.format, "output format: human|json")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("--jobs", opt.jobs, "parallelism degree (results are deterministic)");
    app.add_option("--seed", opt.seed, "seed for sampled property checks");

    std::string algebra_path, datum_path, mp_path, comm_path;
    auto* verify = app.add_subcommand("verify", "validate an algebra or datum file");
    verify->add_option("--algebra", algebra_path);
    verify->add_option("--datum", datum_path);
    verify->add_option("--matched-pair", mp_path);
    verify->add_option("--commutative", comm_path);

    std::string prod_type = "unified", prod_input;
    auto* product = app.add_subcommand("product", "build unified/bicrossed/crossed products");
    product->add_option("--type", prod_type)->check(CLI::IsMember({"unified", "bicrossed", "crossed"}));
    product->add_option("--input", prod_input)->required();

    std::string fac_algebra, fac_a, fac_v;
    auto* fact = app.add_subcommand("factorize", "split an algebra across two complementary spans");
    fact->add_option("--algebra", fac_algebra)->required();
    fact->add_option("--a-basis", fac_a)->required();
    fact->add_option("--v-basis", fac_v)->required();

    std::string fe_base;
    auto* fenum = app.add_subcommand("flag-enum", "enumerate flag datums of a base algebra");
    fenum->add_option("--base", fe_base)->required();

    std::string cl_base, cl_mode = "equivalent", cl_field;
    bool cl_codim1 = false;
    auto* classify = app.add_subcommand("classify", "classify codimension-1 extensions");
    classify->add_flag("--codim1", cl_codim1);
    classify->add_option("--base", cl_base)->required();
    classify->add_option("--mode", cl_mode)->check(CLI::IsMember({"equivalent", "cohomologous"}));
    classify->add_option("--field", cl_field, "expected field of the base (validated)");

    std::string ss_field;
    int ss_dim = 2;
    auto* ss = app.add_subcommand("supersolvable", "catalog of supersolvable algebras");
    ss->add_option("--field", ss_field)->required();
    ss->add_option("--dim", ss_dim)->required();

    std::string cat_field;
    int cat_dim = 2;
    bool cat_check = false;
    auto* cat = app.add_subcommand("catalog", "named normal-form catalogs");
    cat->add_option("--field", cat_field)->required();
    cat->add_option("--dim", cat_dim)->required()->check(CLI::IsMember({2, 3}));
    cat->add_flag("--check", cat_check, "cross-check against the brute-force enumeration");

    std::string gal_algebra, gal_sub, gal_method = "all", gal_field;
    auto* gal = app.add_subcommand("galois", "Galois group of an algebra extension");
    gal->add_option("--algebra", gal_algebra)->required();
    gal->add_option("--sub", gal_sub)->required();
    gal->add_option("--field", gal_field, "expected field of the algebra (validated)");
    gal->add_option("--method", gal_method)
        ->check(CLI::IsMember({"brute", "unified", "codim1", "all"}));

    std::string or_field, or_contains, or_extensions;
    int or_dim = 2;
    bool or_ss = false, or_comm = false;
    long long or_budget = 50'000'000;
    auto* orc = app.add_subcommand("oracle", "brute-force enumeration and classification");
    orc->add_option("--field", or_field)->required();
    orc->add_option("--dim", or_dim);
    orc->add_flag("--supersolvable", or_ss);
    orc->add_flag("--commutative", or_comm);
    orc->add_option("--contains", or_contains);
    orc->add_option("--extensions-of", or_extensions);
    orc->add_option("--budget", or_budget);

    std::string pc_suite = "axioms", pc_field = "GF(3)";
    int pc_n = 1000, pc_dim_a = 2, pc_vdim = 1;
    auto* pc = app.add_subcommand("propcheck", "seeded property-test suites");
    pc->add_option("--suite", pc_suite)->check(CLI::IsMember({"axioms", "morphism", "commutative"}));
    pc->add_option("--n", pc_n);
    pc->add_option("--field", pc_field);
    pc->add_option("--dim-a", pc_dim_a);
    pc->add_option("--vdim", pc_vdim);

    for (auto* sub : app.get_subcommands(
             [](const CLI::App*) { return true; }))  // global flags may follow the subcommand
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(opt, algebra_path, datum_path, mp_path, comm_path);
        if (product->parsed()) return cmd_product(opt, prod_type, prod_input);
        if (fact->parsed()) return cmd_factorize(opt, fac_algebra, fac_a, fac_v);
        if (fenum->parsed()) return cmd_flag_enum(opt, fe_base);
        if (classify->parsed()) return cmd_classify(opt, cl_base, cl_mode, cl_field);
        if (ss->parsed()) return cmd_supersolvable(opt, ss_field, ss_dim);
        if (cat->parsed()) return cmd_catalog(opt, cat_field, cat_dim, cat_check, opt.jobs);
        if (gal->parsed()) return cmd_galois(opt, gal_algebra, gal_sub, gal_method, gal_field);
        if (orc->parsed())
            return cmd_oracle(opt, or_field, or_dim, or_ss, or_comm, or_contains, or_extensions,
                              or_budget, opt.jobs);
        if (pc->parsed()) return cmd_propcheck(opt, pc_suite, pc_n, pc_field, pc_dim_a, pc_vdim);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
