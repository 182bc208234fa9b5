#include "extalg/json_io.hpp"

namespace extalg {

json vec_to_json(const Field& F, const Vec& v) {
    json a = json::array();
    for (const Fel& x : v) a.push_back(F.to_string(x));
    return a;
}

Vec vec_from_json(const Field& F, const json& j) {
    if (!j.is_array()) fail("ParseError", "expected an array of field elements");
    Vec v;
    for (const auto& e : j) v.push_back(F.parse_element(e.get<std::string>()));
    return v;
}

json mat_to_json(const Field& F, const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) rows.push_back(vec_to_json(F, m.row(i)));
    return rows;
}

Mat mat_from_json(const Field& F, const json& j) {
    if (!j.is_array()) fail("ParseError", "expected a matrix");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(F, r));
    return Mat::from_rows(rows);
}

json algebra_to_json(const Algebra& A) {
    const Field& F = *A.F;
    json j;
    j["field"] = F.spec_string();
    j["dim"] = A.dim;
    j["unit"] = vec_to_json(F, A.unit);
    json table = json::array();
    for (int i = 0; i < A.dim; ++i) {
        json row = json::array();
        for (int k = 0; k < A.dim; ++k) row.push_back(vec_to_json(F, A.basis_product(i, k)));
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

Algebra algebra_from_json(const json& j) {
    FieldPtr F = Field::parse(j.at("field").get<std::string>());
    int dim = j.at("dim").get<int>();
    Algebra A(F, dim);
    A.unit = vec_from_json(*F, j.at("unit"));
    if ((int)A.unit.size() != dim) fail("ParseError", "unit length does not match dim");
    const json& table = j.at("table");
    if ((int)table.size() != dim) fail("ParseError", "table shape");
    for (int i = 0; i < dim; ++i) {
        if ((int)table[i].size() != dim) fail("ParseError", "table shape");
        for (int k = 0; k < dim; ++k) {
            Vec p = vec_from_json(*F, table[i][k]);
            if ((int)p.size() != dim) fail("ParseError", "table entry length");
            A.set_product(i, k, p);
        }
    }
    return A;
}

namespace {

json bilinear_to_json(const Field& F, const BilinearMap& B) {
    json out = json::array();
    for (int i = 0; i < B.l; ++i) {
        json row = json::array();
        for (int j = 0; j < B.r; ++j) row.push_back(vec_to_json(F, B.value(i, j)));
        out.push_back(row);
    }
    return out;
}

BilinearMap bilinear_from_json(const Field& F, const json& j, int l, int r, int c) {
    BilinearMap B(l, r, c);
    if ((int)j.size() != l) fail("ParseError", "bilinear map shape");
    for (int i = 0; i < l; ++i) {
        if ((int)j[i].size() != r) fail("ParseError", "bilinear map shape");
        for (int k = 0; k < r; ++k) {
            Vec v = vec_from_json(F, j[i][k]);
            if ((int)v.size() != c) fail("ParseError", "bilinear map value length");
            B.set_value(i, k, v);
        }
    }
    return B;
}

}  // namespace

json datum_to_json(const ExtendingDatum& D) {
    const Field& F = *D.A.F;
    json j;
    j["algebra"] = algebra_to_json(D.A);
    j["vdim"] = D.vdim;
    j["lact"] = bilinear_to_json(F, D.lact);
    j["ract"] = bilinear_to_json(F, D.ract);
    j["lhar"] = bilinear_to_json(F, D.lhar);
    j["rhar"] = bilinear_to_json(F, D.rhar);
    j["cocycle"] = bilinear_to_json(F, D.cocycle);
    j["vmult"] = bilinear_to_json(F, D.vmult);
    return j;
}

ExtendingDatum datum_from_json(const json& j) {
    Algebra A = algebra_from_json(j.at("algebra"));
    int m = j.at("vdim").get<int>();
    const Field& F = *A.F;
    int n = A.dim;
    ExtendingDatum D(A, m);
    D.lact = bilinear_from_json(F, j.at("lact"), m, n, m);
    D.ract = bilinear_from_json(F, j.at("ract"), m, n, n);
    D.lhar = bilinear_from_json(F, j.at("lhar"), n, m, n);
    D.rhar = bilinear_from_json(F, j.at("rhar"), n, m, m);
    D.cocycle = bilinear_from_json(F, j.at("cocycle"), m, m, n);
    D.vmult = bilinear_from_json(F, j.at("vmult"), m, m, m);
    return D;
}

json matched_pair_to_json(const MatchedPair& mp) {
    const Field& F = *mp.A.F;
    json j;
    j["algebra"] = algebra_to_json(mp.A);
    j["vdim"] = mp.vdim;
    j["vmult"] = bilinear_to_json(F, mp.vmult);
    j["lact"] = bilinear_to_json(F, mp.lact);
    j["ract"] = bilinear_to_json(F, mp.ract);
    j["lhar"] = bilinear_to_json(F, mp.lhar);
    j["rhar"] = bilinear_to_json(F, mp.rhar);
    return j;
}

MatchedPair matched_pair_from_json(const json& j) {
    MatchedPair mp;
    mp.A = algebra_from_json(j.at("algebra"));
    mp.vdim = j.at("vdim").get<int>();
    const Field& F = *mp.A.F;
    int n = mp.A.dim, m = mp.vdim;
    mp.vmult = bilinear_from_json(F, j.at("vmult"), m, m, m);
    mp.lact = bilinear_from_json(F, j.at("lact"), m, n, m);
    mp.ract = bilinear_from_json(F, j.at("ract"), m, n, n);
    mp.lhar = bilinear_from_json(F, j.at("lhar"), n, m, n);
    mp.rhar = bilinear_from_json(F, j.at("rhar"), n, m, m);
    return mp;
}

json flag_datum_to_json(const Field& F, const FlagDatum& fd) {
    json j;
    j["Lambda"] = vec_to_json(F, fd.Lambda);
    j["lambda"] = vec_to_json(F, fd.lambda);
    j["D"] = mat_to_json(F, fd.D);
    j["d"] = mat_to_json(F, fd.d);
    j["a0"] = vec_to_json(F, fd.a0);
    j["u"] = F.to_string(fd.u);
    return j;
}

FlagDatum flag_datum_from_json(const Field& F, const json& j) {
    FlagDatum fd;
    fd.Lambda = vec_from_json(F, j.at("Lambda"));
    fd.lambda = vec_from_json(F, j.at("lambda"));
    fd.D = mat_from_json(F, j.at("D"));
    fd.d = mat_from_json(F, j.at("d"));
    fd.a0 = vec_from_json(F, j.at("a0"));
    fd.u = F.parse_element(j.at("u").get<std::string>());
    return fd;
}

GroupPresentationInput group_input_from_json(const json& j) {
    GroupPresentationInput g;
    for (const auto& l : j.at("labels")) g.labels.push_back(l.get<std::string>());
    for (const auto& row : j.at("table")) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(v.get<int>());
        g.table.push_back(r);
    }
    g.identity = j.value("identity", 0);
    g.validate();
    return g;
}

CrossedProductInput crossed_input_from_json(const json& j) {
    CrossedProductInput in;
    in.A = algebra_from_json(j.at("algebra"));
    in.G = group_input_from_json(j.at("group"));
    const Field& F = *in.A.F;
    for (const auto& m : j.at("action")) in.action.push_back(mat_from_json(F, m));
    for (const auto& row : j.at("cocycle")) {
        std::vector<Vec> r;
        for (const auto& v : row) r.push_back(vec_from_json(F, v));
        in.cocycle.push_back(r);
    }
    return in;
}

json group_to_json(const Field& F, const FiniteGroup& G) {
    json j;
    j["order"] = G.order();
    j["abelian"] = G.abelian();
    std::string hint = G.iso_hint();
    if (!hint.empty()) j["iso_hint"] = hint;
    j["element_orders"] = G.element_orders();
    json els = json::array();
    for (const Mat& m : G.action) els.push_back(json{{"matrix", mat_to_json(F, m)}});
    j["elements"] = els;
    j["table"] = G.table;
    return j;
}

}  // namespace extalg
