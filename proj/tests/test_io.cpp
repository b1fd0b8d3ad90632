#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grassmoduli/io.hpp"

using namespace grassmoduli;

TEST_CASE("moduli report JSON carries the exact schema") {
  std::string text = io::to_json(moduli_report(2, 2, 1), -1);
  CHECK(text ==
        R"({"p":2,"q":2,"k":1,"dim_H0":"6","dim_sym_square":"21",)"
        R"("dim_F2k":"20","dim_Vk":"1","N":"-1","dim_image_moduli":"0",)"
        R"("gs_sym_components":[[2,2]],"flags":{"routes_agree":true,)"
        R"("gs_singleton":true,"skew_label_matches_paper":false}})");
}

TEST_CASE("JSON output round-trips byte-identically") {
  for (int indent : {-1, 2}) {
    std::string report = io::to_json(moduli_report(3, 2, 1), indent);
    CHECK(io::rewrite_json(report, indent) == report);

    std::string components = io::to_json(classify_components(3, 2, 1), indent);
    CHECK(io::rewrite_json(components, indent) == components);
  }
}

TEST_CASE("component JSON carries both parameterizations") {
  auto comps = rect_square_closed_form(2, 2, 1);
  std::string text = io::to_json(comps[2], -1);  // i = (1,0)
  CHECK(text ==
        R"({"i":[1,0],"j":[0,1],"partition":[2,1,1],"fund":[1,0,1]})");
}

TEST_CASE("component report JSON renders weights as num/den objects") {
  std::string text = io::to_json(classify_components(3, 2, 1), -1);
  CHECK(text.find(R"("center_weight":{"num":"-7","den":"6"})") !=
        std::string::npos);
  CHECK(text.find(R"("dim":"15")") != std::string::npos);
  CHECK(text.find(R"("parity":"alt")") != std::string::npos);
}

TEST_CASE("schur expansion JSON lists terms in decreasing lex order") {
  SchurExpansion e;
  e.add(Partition{1, 1, 1, 1}, 1);
  e.add(Partition{2, 2}, 1);
  e.add(Partition{2, 1, 1}, -1);
  CHECK(io::to_json(e, -1) ==
        R"([{"partition":[2,2],"coeff":"1"},)"
        R"({"partition":[2,1,1],"coeff":"-1"},)"
        R"({"partition":[1,1,1,1],"coeff":"1"}])");
}

TEST_CASE("decompose CSV quotes list-valued fields") {
  std::string csv = io::to_csv(classify_components(2, 2, 1));
  std::string expected =
      "partition,fund,i,j,parity,dim,center_weight,gs_flag\n"
      "\"2,2\",\"0,2,0\",\"0,0\",\"0,0\",sym,20,-2,true\n"
      "\"2,1,1\",\"1,0,1\",\"1,0\",\"0,1\",alt,15,-1,true\n"
      "\"1,1,1,1\",\"0,0,0\",\"0,1\",\"1,0\",sym,1,0,false\n";
  CHECK(csv == expected);
}

TEST_CASE("moduli CSV has one header and one data row") {
  std::string csv = io::to_csv(moduli_report(2, 2, 1));
  CHECK(csv ==
        "p,q,k,dim_H0,dim_sym_square,dim_F2k,dim_Vk,N,dim_image_moduli,"
        "gs_sym_components,routes_agree,gs_singleton,"
        "skew_label_matches_paper\n"
        "2,2,1,6,21,20,1,-1,0,\"2,2\",true,true,false\n");
}

TEST_CASE("tables are deterministic") {
  std::string a = io::to_table(classify_components(2, 2, 1));
  std::string b = io::to_table(classify_components(2, 2, 1));
  CHECK(a == b);
  CHECK(a.find("partition") != std::string::npos);
  CHECK(io::to_table(moduli_report(2, 2, 1)) ==
        io::to_table(moduli_report(2, 2, 1)));
}
