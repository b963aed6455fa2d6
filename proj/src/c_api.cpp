#include "hamvf/hamvf.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "hamvf/diagnostics.hpp"
#include "hamvf/error.hpp"
#include "hamvf/homotopy.hpp"
#include "hamvf/run_spec.hpp"

struct hamvf_spec {
  hamvf::RunSpec spec;
};

struct hamvf_solution {
  hamvf::SeriesSolution solution;
};

namespace {

thread_local std::string g_last_error;

hamvf_status fail(hamvf_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

hamvf_status status_for(const hamvf::Error& e) {
  switch (e.code()) {
    case hamvf::ErrorCode::invalid_argument:
    case hamvf::ErrorCode::arity_mismatch: return HAMVF_E_INVALID_ARGUMENT;
    case hamvf::ErrorCode::not_exactly_evaluable: return HAMVF_E_NOT_EXACT;
    case hamvf::ErrorCode::non_closed_constant: return HAMVF_E_NON_CLOSED_CONSTANT;
    case hamvf::ErrorCode::grid_out_of_domain: return HAMVF_E_OUT_OF_RANGE;
    case hamvf::ErrorCode::config_error: return HAMVF_E_CONFIG;
  }
  return HAMVF_E_INTERNAL;
}

// Runs `fn` and converts any exception into a status code.
template <typename Fn>
hamvf_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const hamvf::Error& e) {
    return fail(status_for(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HAMVF_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HAMVF_E_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

class CallbackBuf : public std::stringbuf {
 public:
  CallbackBuf(hamvf_write_fn fn, void* user) : fn_(fn), user_(user) {}
  ~CallbackBuf() override { flush_to_sink(); }
  int sync() override {
    flush_to_sink();
    return 0;
  }

 private:
  void flush_to_sink() {
    const std::string text = str();
    if (fn_ && !text.empty()) fn_(text.data(), text.size(), user_);
    str(std::string());
  }
  hamvf_write_fn fn_;
  void* user_;
};

}  // namespace

extern "C" {

const char* hamvf_version(void) { return "0.1.0"; }

const char* hamvf_last_error(void) { return g_last_error.c_str(); }

void hamvf_string_free(char* text) { std::free(text); }

hamvf_status hamvf_spec_parse(const char* text, size_t length, hamvf_spec** out) {
  if (!text || !out) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<hamvf_spec>();
    handle->spec = hamvf::parse_config(std::string_view(text, length));
    *out = handle.release();
    return HAMVF_OK;
  });
}

void hamvf_spec_free(hamvf_spec* spec) { delete spec; }

size_t hamvf_spec_method_count(const hamvf_spec* spec) { return spec ? spec->spec.methods.size() : 0; }

const char* hamvf_spec_method_label(const hamvf_spec* spec, size_t index) {
  if (!spec || index >= spec->spec.methods.size()) return nullptr;
  return spec->spec.methods[index].config.label.c_str();
}

hamvf_status hamvf_spec_select(hamvf_spec* spec, const char* const* labels, size_t count) {
  if (!spec || (!labels && count > 0)) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  auto& methods = spec->spec.methods;
  std::vector<bool> keep(methods.size(), false);
  for (size_t i = 0; i < count; ++i) {
    if (!labels[i]) return fail(HAMVF_E_INVALID_ARGUMENT, "null label");
    bool found = false;
    for (size_t j = 0; j < methods.size(); ++j) {
      if (methods[j].config.label == labels[i]) keep[j] = found = true;
    }
    if (!found) return fail(HAMVF_E_CONFIG, std::string("no method labelled '") + labels[i] + "'");
  }
  std::vector<hamvf::MethodRun> selected;
  for (size_t j = 0; j < methods.size(); ++j) {
    if (keep[j]) selected.push_back(methods[j]);
  }
  methods = std::move(selected);
  return HAMVF_OK;
}

hamvf_status hamvf_spec_render(const hamvf_spec* spec, char** out) {
  if (!spec || !out) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(hamvf::render_config(spec->spec));
    return HAMVF_OK;
  });
}

hamvf_status hamvf_solve(const hamvf_spec* spec, size_t method_index, hamvf_solution** out) {
  if (!spec || !out) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (method_index >= spec->spec.methods.size()) return fail(HAMVF_E_OUT_OF_RANGE, "method index out of range");
  return guarded([&] {
    auto handle = std::make_unique<hamvf_solution>();
    handle->solution = hamvf::run(spec->spec.problem_for(method_index), spec->spec.methods[method_index].config);
    *out = handle.release();
    return HAMVF_OK;
  });
}

void hamvf_solution_free(hamvf_solution* solution) { delete solution; }

size_t hamvf_solution_iterations(const hamvf_solution* solution) {
  return solution && !solution->solution.iterates.empty() ? solution->solution.iterates.size() - 1 : 0;
}

int hamvf_solution_diverged(const hamvf_solution* solution, size_t* iterate) {
  if (!solution || !solution->solution.divergence) return 0;
  if (iterate) *iterate = solution->solution.divergence->iterate;
  return 1;
}

hamvf_status hamvf_solution_iterate_text(const hamvf_solution* solution, size_t m, char** out) {
  if (!solution || !out) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  if (m >= solution->solution.iterates.size()) return fail(HAMVF_E_OUT_OF_RANGE, "iterate index out of range");
  return guarded([&] {
    *out = copy_string(hamvf::pretty_print(solution->solution.iterates[m]));
    return HAMVF_OK;
  });
}

hamvf_status hamvf_solution_partial_sum_text(const hamvf_solution* solution, size_t m, char** out) {
  if (!solution || !out) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  if (m >= solution->solution.iterates.size()) return fail(HAMVF_E_OUT_OF_RANGE, "partial sum index out of range");
  return guarded([&] {
    *out = copy_string(hamvf::pretty_print(hamvf::partial_sum(solution->solution, static_cast<unsigned>(m))));
    return HAMVF_OK;
  });
}

hamvf_status hamvf_solution_eval(const hamvf_solution* solution, size_t m, double t, double* value) {
  if (!solution || !value) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  if (m >= solution->solution.iterates.size()) return fail(HAMVF_E_OUT_OF_RANGE, "partial sum index out of range");
  return guarded([&] {
    *value = hamvf::eval_float(hamvf::partial_sum(solution->solution, static_cast<unsigned>(m)), t);
    return HAMVF_OK;
  });
}

hamvf_status hamvf_solution_residual_norm(const hamvf_solution* solution, unsigned grid_size, double* value) {
  if (!solution || !value) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *value = hamvf::residual_norm(solution->solution.problem, hamvf::partial_sum(solution->solution), grid_size);
    return HAMVF_OK;
  });
}

hamvf_status hamvf_execute(const hamvf_spec* spec, hamvf_write_fn sink, hamvf_write_fn errors, void* user) {
  if (!spec) return fail(HAMVF_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    int code = 0;
    std::string error_text;
    {
      CallbackBuf out_buf(sink, user);
      std::ostringstream err;
      std::ostream out(&out_buf);
      code = hamvf::execute(spec->spec, out, err);
      out.flush();
      error_text = err.str();
    }
    if (errors && !error_text.empty()) errors(error_text.data(), error_text.size(), user);
    switch (code) {
      case hamvf::exit_ok: return HAMVF_OK;
      case hamvf::exit_config_error: return fail(HAMVF_E_CONFIG, error_text);
      default: return fail(HAMVF_E_SOLVER, error_text);
    }
  });
}

}  // extern "C"
