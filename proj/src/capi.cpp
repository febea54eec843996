#include "antilin/antilin.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "antilin/random.hpp"
#include "antilin/report.hpp"
#include "antilin/teleport.hpp"

struct al_state {
  antilin::BipartiteVector value;
};

struct al_teleport {
  antilin::TeleportMap value;
};

namespace {

using antilin::Complex;
using antilin::ComplexMatrix;
using antilin::ComplexVector;
using antilin::Error;
using antilin::Index;

thread_local std::string g_last_error;

const antilin::VerifyConfig kVerifyDefaults{};

al_status set_error(al_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

al_status null_argument(const char* name) {
  return set_error(AL_ERR_NULL_ARGUMENT, std::string("NullArgument: ") + name + " is NULL");
}

template <typename F>
al_status guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return set_error(static_cast<al_status>(static_cast<int>(e.code())), e.what());
  } catch (const antilin::io::json::exception& e) {
    return set_error(AL_ERR_PARSE, std::string("ParseError: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(AL_ERR_INTERNAL, "Internal: out of memory");
  } catch (const std::exception& e) {
    return set_error(AL_ERR_INTERNAL, std::string("Internal: ") + e.what());
  } catch (...) {
    return set_error(AL_ERR_INTERNAL, "Internal: unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

al_status deliver(const antilin::Report& r, char** out_json, char** out_summary) {
  char* json = copy_string(r.body.dump(2) + "\n");
  char* summary = nullptr;
  if (out_summary != nullptr) {
    try {
      summary = copy_string(r.summary);
    } catch (...) {
      std::free(json);
      throw;
    }
    *out_summary = summary;
  }
  *out_json = json;
  if (r.passed) return AL_OK;
  std::string failed;
  for (const auto& name : r.body["failed"]) failed += " " + name.get<std::string>();
  return set_error(AL_ERR_TOLERANCE_EXCEEDED, "ToleranceExceeded:" + failed);
}

ComplexVector read_vector(const double* data, std::size_t len) {
  ComplexVector v(static_cast<Index>(len));
  for (std::size_t k = 0; k < len; ++k) v(static_cast<Index>(k)) = Complex(data[2 * k], data[2 * k + 1]);
  return v;
}

}  // namespace

extern "C" {

const char* al_version(void) { return "0.1.0"; }

const char* al_status_name(al_status status) {
  switch (status) {
    case AL_OK: return "Ok";
    case AL_ERR_NULL_ARGUMENT: return "NullArgument";
    case AL_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status);
  if (code >= 1 && code <= 15) return antilin::to_string(static_cast<antilin::ErrorCode>(code)).data();
  return "Unknown";
}

const char* al_last_error(void) { return g_last_error.c_str(); }

int al_exit_code(al_status status) {
  switch (status) {
    case AL_OK: return 0;
    case AL_ERR_TOLERANCE_EXCEEDED:
    case AL_ERR_FACTORIZATION_FAILURE: return 3;
    case AL_ERR_NULL_ARGUMENT:
    case AL_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

void al_string_free(char* s) { std::free(s); }

al_status al_state_from_json(const char* json_text, al_state** out) {
  if (json_text == nullptr) return null_argument("json_text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new al_state{antilin::io::bipartite_from_json(antilin::io::parse(json_text))};
    return AL_OK;
  });
}

al_status al_state_from_coeff(size_t dim_a, size_t dim_b, const double* coeff, al_state** out) {
  if (coeff == nullptr) return null_argument("coeff");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (dim_a == 0 || dim_b == 0) throw Error(antilin::ErrorCode::InvalidArgument, "dimensions must be positive");
    const ComplexVector flat = read_vector(coeff, dim_a * dim_b);
    *out = new al_state{antilin::BipartiteVector::from_flat(flat, static_cast<Index>(dim_a),
                                                            static_cast<Index>(dim_b))};
    return AL_OK;
  });
}

al_status al_state_maximally_entangled(size_t d, al_state** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (d == 0) throw Error(antilin::ErrorCode::InvalidArgument, "dimension must be positive");
    *out = new al_state{antilin::BipartiteVector::maximally_entangled(static_cast<Index>(d))};
    return AL_OK;
  });
}

al_status al_state_random(size_t dim_a, size_t dim_b, uint64_t seed, int completely_entangled,
                          al_state** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new al_state{antilin::random_state(static_cast<Index>(dim_a), static_cast<Index>(dim_b), seed,
                                              completely_entangled != 0)};
    return AL_OK;
  });
}

void al_state_free(al_state* state) { delete state; }

al_status al_state_dims(const al_state* state, size_t* dim_a, size_t* dim_b) {
  if (state == nullptr) return null_argument("state");
  if (dim_a != nullptr) *dim_a = static_cast<size_t>(state->value.dim_a());
  if (dim_b != nullptr) *dim_b = static_cast<size_t>(state->value.dim_b());
  return AL_OK;
}

al_status al_state_norm(const al_state* state, double* out) {
  if (state == nullptr) return null_argument("state");
  if (out == nullptr) return null_argument("out");
  *out = state->value.norm();
  return AL_OK;
}

al_status al_state_coeff(const al_state* state, double* coeff, size_t len) {
  if (state == nullptr) return null_argument("state");
  if (coeff == nullptr) return null_argument("coeff");
  return guarded([&] {
    const ComplexVector flat = state->value.flat();
    if (len != static_cast<size_t>(flat.size())) {
      throw Error(antilin::ErrorCode::DimMismatch, "coefficient buffer has " + std::to_string(len) +
                                                       " entries, state has " + std::to_string(flat.size()));
    }
    for (Index k = 0; k < flat.size(); ++k) {
      coeff[2 * k] = flat(k).real();
      coeff[2 * k + 1] = flat(k).imag();
    }
    return AL_OK;
  });
}

al_status al_state_to_json(const al_state* state, char** out) {
  if (state == nullptr) return null_argument("state");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = copy_string(antilin::io::to_json(state->value).dump());
    return AL_OK;
  });
}

al_status al_teleport_create(const al_state* psi_ab, const al_state* phi_bc, al_teleport** out) {
  if (psi_ab == nullptr) return null_argument("psi_ab");
  if (phi_bc == nullptr) return null_argument("phi_bc");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new al_teleport{antilin::teleport_map(psi_ab->value, phi_bc->value)};
    return AL_OK;
  });
}

void al_teleport_free(al_teleport* tm) { delete tm; }

al_status al_teleport_dims(const al_teleport* tm, size_t* dim_a, size_t* dim_c) {
  if (tm == nullptr) return null_argument("tm");
  if (dim_a != nullptr) *dim_a = static_cast<size_t>(tm->value.t.cols());
  if (dim_c != nullptr) *dim_c = static_cast<size_t>(tm->value.t.rows());
  return AL_OK;
}

al_status al_teleport_apply(const al_teleport* tm, const double* in, size_t in_len, double* out,
                            size_t out_len) {
  if (tm == nullptr) return null_argument("tm");
  if (in == nullptr) return null_argument("in");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const ComplexMatrix& t = tm->value.t;
    if (in_len != static_cast<size_t>(t.cols()) || out_len != static_cast<size_t>(t.rows())) {
      throw Error(antilin::ErrorCode::DimMismatch, "buffer lengths do not match the map");
    }
    const ComplexVector v = read_vector(in, in_len);
    if (!antilin::is_finite(v)) throw Error(antilin::ErrorCode::NonFinite, "input vector");
    const ComplexVector w = t * v;
    for (Index k = 0; k < w.size(); ++k) {
      out[2 * k] = w(k).real();
      out[2 * k + 1] = w(k).imag();
    }
    return AL_OK;
  });
}

al_status al_teleport_bounds(const al_teleport* tm, double* success_bound, double* trace_norm,
                             double* fidelity) {
  if (tm == nullptr) return null_argument("tm");
  return guarded([&] {
    const double bound = antilin::success_bound(tm->value);
    const antilin::TraceNormFidelity tf = antilin::trace_norm_fidelity(tm->value);
    if (success_bound != nullptr) *success_bound = bound;
    if (trace_norm != nullptr) *trace_norm = tf.trace_norm;
    if (fidelity != nullptr) *fidelity = tf.fidelity;
    return AL_OK;
  });
}

al_status al_report(const char* command, const char* input_json, double tolerance, char** out_json,
                    char** out_summary) {
  if (command == nullptr) return null_argument("command");
  if (input_json == nullptr) return null_argument("input_json");
  if (out_json == nullptr) return null_argument("out_json");
  return guarded([&] {
    const antilin::Report r = antilin::run_report(command, antilin::io::parse(input_json), tolerance);
    return deliver(r, out_json, out_summary);
  });
}

al_verify_config al_verify_defaults(void) {
  static const size_t dims[] = {2, 3, 4};
  al_verify_config c;
  c.seed = kVerifyDefaults.seed;
  c.dims = dims;
  c.n_dims = sizeof dims / sizeof dims[0];
  c.tolerance = kVerifyDefaults.tolerance;
  c.trials = kVerifyDefaults.trials;
  c.threads = kVerifyDefaults.threads;
  return c;
}

al_status al_verify(const al_verify_config* config, char** out_json, char** out_summary) {
  if (config == nullptr) return null_argument("config");
  if (out_json == nullptr) return null_argument("out_json");
  if (config->n_dims > 0 && config->dims == nullptr) return null_argument("config->dims");
  return guarded([&] {
    antilin::VerifyConfig cfg;
    cfg.seed = config->seed;
    cfg.dims.assign(config->dims, config->dims + config->n_dims);
    cfg.tolerance = config->tolerance;
    cfg.trials = config->trials;
    cfg.threads = config->threads;
    return deliver(antilin::verify(cfg), out_json, out_summary);
  });
}

}  // extern "C"
