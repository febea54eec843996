#include "antilin/io.hpp"

#include <cmath>
#include <string>

namespace antilin::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

Index positive_int(const json& j, std::string_view key) {
  const json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(std::string(key) + " must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

double finite_number(const json& v) {
  if (!v.is_number()) fail("matrix entries must be numbers");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
  return x;
}

}  // namespace

const json& member(const json& j, std::string_view key) {
  if (!j.is_object()) fail("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail("missing field \"" + std::string(key) + "\"");
  return *it;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::out_of_range& e) {
    // 406: a literal such as 1e999 overflows double.
    if (e.id == 406) throw Error(ErrorCode::NonFinite, e.what());
    fail(e.what());
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

json to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json to_json(const AntilinearMap& t) {
  return {{"dim_domain", t.dim_domain()},
          {"dim_codomain", t.dim_codomain()},
          {"mat", to_json(t.mat())},
          {"parity", "antilinear"}};
}

json to_json(const BipartiteVector& psi) {
  return {{"dim_a", psi.dim_a()}, {"dim_b", psi.dim_b()}, {"coeff", to_json(psi.coeff())}};
}

json to_json(const ComplexVector& v) {
  json data = json::array();
  for (Index i = 0; i < v.size(); ++i) data.push_back({v(i).real(), v(i).imag()});
  return data;
}

ComplexMatrix matrix_from_json(const json& j) {
  const Index rows = positive_int(j, "rows");
  const Index cols = positive_int(j, "cols");
  const json& data = member(j, "data");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
    fail("\"data\" must hold rows*cols entries");
  }
  ComplexMatrix m(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    const json& e = data[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2) fail("each entry must be [re, im]");
    m(k / cols, k % cols) = Complex(finite_number(e[0]), finite_number(e[1]));
  }
  return m;
}

AntilinearMap antilinear_from_json(const json& j) {
  const json& parity = member(j, "parity");
  if (!parity.is_string() || parity.get<std::string>() != "antilinear") {
    fail("\"parity\" must be \"antilinear\"");
  }
  const Index dom = positive_int(j, "dim_domain");
  const Index cod = positive_int(j, "dim_codomain");
  ComplexMatrix m = matrix_from_json(member(j, "mat"));
  if (m.rows() != cod || m.cols() != dom) fail("\"mat\" shape disagrees with declared dims");
  return AntilinearMap(std::move(m));
}

BipartiteVector bipartite_from_json(const json& j) {
  const Index da = positive_int(j, "dim_a");
  const Index db = positive_int(j, "dim_b");
  ComplexMatrix c = matrix_from_json(member(j, "coeff"));
  if (c.rows() != da || c.cols() != db) fail("\"coeff\" shape disagrees with dim_a/dim_b");
  return BipartiteVector(std::move(c));
}

}  // namespace antilin::io
