#include "doctest.h"

#include <sstream>

#include "qcomb/report.hpp"

using namespace qcomb::report;

TEST_CASE("doubles print compactly and deterministically") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(1e-9) == "1e-09");
}

TEST_CASE("csv quoting follows the quoting rules") {
    Table t;
    t.columns = {"a", "b"};
    t.rows.push_back({"plain", "has,comma"});
    t.rows.push_back({"has\"quote", "multi\nline"});
    std::ostringstream os;
    write_csv(os, t);
    CHECK(os.str() ==
          "a,b\n"
          "plain,\"has,comma\"\n"
          "\"has\"\"quote\",\"multi\nline\"\n");
}

TEST_CASE("json lines quote strings and leave numbers bare") {
    Table t;
    t.columns = {"n", "value", "label"};
    t.rows.push_back({"3", "-1.5e3", "x/y"});
    std::ostringstream os;
    write_json_lines(os, t);
    CHECK(os.str() == "{\"n\":3,\"value\":-1.5e3,\"label\":\"x/y\"}\n");
}

TEST_CASE("reports serialize with stable field order") {
    OracleReport r{"demo.quantity",
                   {{"n", "4"}, {"mode", "fast"}},
                   "3/4",
                   "0.75",
                   "1e-06",
                   true};
    std::ostringstream csv;
    write_csv(csv, {r});
    CHECK(csv.str() ==
          "quantity,params,exact,oracle,tolerance,pass\n"
          "demo.quantity,n=4 mode=fast,3/4,0.75,1e-06,true\n");
    std::ostringstream js;
    write_json_lines(js, {r});
    CHECK(js.str() ==
          "{\"quantity\":\"demo.quantity\",\"params\":{\"n\":4,"
          "\"mode\":\"fast\"},\"exact\":\"3/4\",\"oracle\":\"0.75\","
          "\"tolerance\":\"1e-06\",\"pass\":true}\n");
    CHECK(all_pass({r}));
    r.pass = false;
    CHECK(!all_pass({r}));
}
