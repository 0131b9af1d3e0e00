#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cliffbundle/cliffbundle.h>

#include <cstring>
#include <string>

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { cb_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("version string is present") {
  const char* v = cb_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
}

TEST_CASE("algebra and multivector lifecycle") {
  cb_algebra* alg = nullptr;
  REQUIRE(cb_algebra_create(1, 1, &alg) == CB_OK);

  cb_mv* e0 = nullptr;
  cb_mv* e1 = nullptr;
  REQUIRE(cb_mv_basis(alg, 1u, &e0) == CB_OK);
  REQUIRE(cb_mv_basis(alg, 2u, &e1) == CB_OK);

  // e0*e0 = +1, e1*e1 = -1 in Cl(1,1)
  cb_mv* sq = nullptr;
  REQUIRE(cb_mv_product(e0, e0, &sq) == CB_OK);
  {
    StringOut j;
    REQUIRE(cb_mv_to_json(sq, &j.s) == CB_OK);
    CHECK(j.str().find("\"0\":1.0") != std::string::npos);
  }
  cb_mv_destroy(sq);
  sq = nullptr;
  REQUIRE(cb_mv_product(e1, e1, &sq) == CB_OK);
  {
    StringOut j;
    REQUIRE(cb_mv_to_json(sq, &j.s) == CB_OK);
    CHECK(j.str().find("\"0\":-1.0") != std::string::npos);
  }

  // grade projection keeps the bivector part of e0*e1
  cb_mv* b = nullptr;
  REQUIRE(cb_mv_product(e0, e1, &b) == CB_OK);
  cb_mv* g2 = nullptr;
  REQUIRE(cb_mv_grade_project(b, 2, &g2) == CB_OK);
  StringOut jb, jg;
  REQUIRE(cb_mv_to_json(b, &jb.s) == CB_OK);
  REQUIRE(cb_mv_to_json(g2, &jg.s) == CB_OK);
  CHECK(jb.str() == jg.str());

  cb_mv_destroy(g2);
  cb_mv_destroy(b);
  cb_mv_destroy(sq);
  cb_mv_destroy(e1);
  cb_mv_destroy(e0);
  cb_algebra_destroy(alg);
}

TEST_CASE("multivector json round trip") {
  cb_mv* m = nullptr;
  REQUIRE(cb_mv_from_json(R"({"sig":[2,0],"coeffs":{"0":1.5,"3":-0.25}})",
                          &m) == CB_OK);
  StringOut j;
  REQUIRE(cb_mv_to_json(m, &j.s) == CB_OK);
  cb_mv* again = nullptr;
  REQUIRE(cb_mv_from_json(j.s, &again) == CB_OK);
  StringOut j2;
  REQUIRE(cb_mv_to_json(again, &j2.s) == CB_OK);
  CHECK(j.str() == j2.str());
  cb_mv_destroy(again);
  cb_mv_destroy(m);
}

TEST_CASE("errors map to statuses and leave a message") {
  cb_algebra* alg = nullptr;
  CHECK(cb_algebra_create(-1, 2, &alg) == CB_INVALID_ARGUMENT);
  CHECK(alg == nullptr);
  REQUIRE(cb_last_error() != nullptr);
  CHECK(std::strlen(cb_last_error()) > 0);

  cb_mv* m = nullptr;
  CHECK(cb_mv_from_json("garbage", &m) == CB_PARSE);

  // mixed signatures refuse to multiply
  cb_mv* a = nullptr;
  cb_mv* b = nullptr;
  REQUIRE(cb_mv_from_json(R"({"sig":[2,0],"coeffs":{"1":1}})", &a) == CB_OK);
  REQUIRE(cb_mv_from_json(R"({"sig":[1,1],"coeffs":{"1":1}})", &b) == CB_OK);
  cb_mv* prod = nullptr;
  CHECK(cb_mv_product(a, b, &prod) == CB_SIGNATURE_MISMATCH);
  CHECK(prod == nullptr);
  cb_mv_destroy(b);
  cb_mv_destroy(a);

  CHECK(cb_mv_basis(nullptr, 0, &m) == CB_INVALID_ARGUMENT);
}

TEST_CASE("gamma dump emits both conventions") {
  StringOut mm, mp;
  REQUIRE(cb_gamma_dump("mm", 4, &mm.s) == CB_OK);
  REQUIRE(cb_gamma_dump("mostly-plus", 2, &mp.s) == CB_OK);
  CHECK(mm.str().find("mostly-minus") != std::string::npos);
  CHECK(mp.str().find("mostly-plus") != std::string::npos);
  StringOut bad;
  CHECK(cb_gamma_dump("zz", 4, &bad.s) == CB_INVALID_ARGUMENT);
  CHECK(cb_gamma_dump("mm", 3, &bad.s) == CB_INVALID_ARGUMENT);
}

TEST_CASE("verify runner is deterministic through the C surface") {
  StringOut a, b;
  int pa = 0, pb = 0;
  REQUIRE(cb_run_verify("clifford", 11, 1.0, 0.0, "json", &a.s, &pa) == CB_OK);
  REQUIRE(cb_run_verify("clifford", 11, 1.0, 0.0, "json", &b.s, &pb) == CB_OK);
  CHECK(pa == 1);
  CHECK(a.str() == b.str());

  StringOut hurt;
  int ph = 1;
  REQUIRE(cb_run_verify("clifford", 11, 1.0, 1e-3, "csv", &hurt.s, &ph) ==
          CB_OK);
  CHECK(ph == 0);

  StringOut nope;
  int pn = 0;
  CHECK(cb_run_verify("nope", 1, 1.0, 0.0, "json", &nope.s, &pn) ==
        CB_INVALID_ARGUMENT);
  CHECK(cb_run_verify("clifford", 1, 1.0, 0.0, "yaml", &nope.s, &pn) ==
        CB_INVALID_ARGUMENT);
  CHECK(cb_run_verify("clifford", 1, -2.0, 0.0, "json", &nope.s, &pn) ==
        CB_INVALID_ARGUMENT);
}

TEST_CASE("geometry runner returns the table") {
  StringOut csv;
  REQUIRE(cb_run_geometry(
              R"({"metric":{"name":"polar_flat_2d"},"points":[[2,0.7]]})",
              &csv.s) == CB_OK);
  CHECK(csv.str().find("Gamma_0_1_1") != std::string::npos);
  CHECK(csv.str().find("-2") != std::string::npos);
  StringOut bad;
  CHECK(cb_run_geometry("{}", &bad.s) == CB_PARSE);
}

TEST_CASE("evolve runner reports final observables") {
  StringOut csv;
  double norm = 0.0, pre = 0.0, pim = 0.0;
  REQUIRE(cb_run_evolve(
              R"({"engine":"dirac1p1","lattice":{"n":32,"dx":0.1},
                  "cfg":{"dt":0.01,"steps":20,"m":0.5},
                  "initial":{"kind":"gaussian","sigma":0.8,"k":1.0}})",
              nullptr, &csv.s, &norm, &pre, &pim) == CB_OK);
  CHECK(std::abs(norm - 1.0) < 1e-10);
  CHECK(csv.str().rfind("t,norm,re_p,im_p", 0) == 0);

  StringOut bad;
  CHECK(cb_run_evolve(
            R"({"engine":"dirac1p1","lattice":{"n":32,"dx":0.1},
                "cfg":{"dt":0.5,"steps":5,"m":0}})",
            nullptr, &bad.s, &norm, &pre, &pim) == CB_STABILITY);
  CHECK(std::string(cb_last_error()).find("suggested dt") !=
        std::string::npos);
  CHECK(cb_run_evolve("][", nullptr, &bad.s, &norm, &pre, &pim) == CB_PARSE);
}
