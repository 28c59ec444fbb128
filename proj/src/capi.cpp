#include "monres.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "betti.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "taylor.hpp"

struct monres_ideal {
  monres::MonomialIdeal value;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_diagnostics;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

monres_status fail(monres_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps the library's exception taxonomy onto status codes.
template <class Fn>
monres_status guarded(Fn&& fn) {
  g_last_error.clear();
  g_last_diagnostics.clear();
  try {
    return fn();
  } catch (const monres::ParseError& e) {
    return fail(MONRES_ERR_PARSE, e.what());
  } catch (const monres::ResourceError& e) {
    return fail(MONRES_ERR_RESOURCE, e.what());
  } catch (const monres::DimensionError& e) {
    return fail(MONRES_ERR_DOMAIN, e.what());
  } catch (const monres::DomainError& e) {
    return fail(MONRES_ERR_DOMAIN, e.what());
  } catch (const monres::OverflowError& e) {
    return fail(MONRES_ERR_RESOURCE, e.what());
  } catch (const monres::Error& e) {
    return fail(MONRES_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(MONRES_ERR_INTERNAL, e.what());
  }
}

struct ParsedOptions {
  monres::Method method = monres::Method::Decompose;
  monres::FieldSpec field = monres::FieldSpec::rationals();
  monres::EngineOptions engine;
  monres_format format = MONRES_FORMAT_TEXT;
};

ParsedOptions parse_options(const monres_options* options) {
  ParsedOptions parsed;
  if (options == nullptr) return parsed;
  if (options->method != nullptr) {
    parsed.method = monres::parse_method(options->method);
  }
  if (options->field != nullptr) {
    parsed.field = monres::FieldSpec::parse(options->field);
  }
  parsed.engine.seed = options->seed;
  if (options->max_generators != 0) {
    if (options->max_generators < 1 ||
        options->max_generators > monres::TaylorComplex::kDefaultMaxGenerators) {
      throw monres::DomainError("max_generators must lie in [1, 20]");
    }
    parsed.engine.max_generators = options->max_generators;
  }
  switch (options->format) {
    case MONRES_FORMAT_TEXT:
    case MONRES_FORMAT_JSON:
    case MONRES_FORMAT_DOT:
      parsed.format = static_cast<monres_format>(options->format);
      break;
    default:
      throw monres::DomainError("unknown output format");
  }
  return parsed;
}

monres::RandomIdealParams parse_random_params(
    const monres_random_params* params, int* count_out) {
  monres::RandomIdealParams out;
  int count = 100;
  if (params != nullptr) {
    if (params->vars > 0) out.vars = params->vars;
    if (params->max_gens > 0) out.max_gens = params->max_gens;
    if (params->max_exp > 0) out.max_exp = params->max_exp;
    if (params->count > 0) count = params->count;
    if (params->artinian != 0) {
      out.constraint = monres::RandomIdealParams::Constraint::Artinian;
    }
    if (params->almost_generic != 0) {
      out.constraint = monres::RandomIdealParams::Constraint::AlmostGeneric;
    }
    if (params->semidominant > 0) {
      out.constraint = monres::RandomIdealParams::Constraint::Semidominant;
      out.semidominant_p = params->semidominant;
    }
  }
  if (count_out != nullptr) *count_out = count;
  return out;
}

monres_status write_output(const std::string& text, char** out) {
  if (out == nullptr) return fail(MONRES_ERR_USAGE, "output pointer is null");
  *out = dup_string(text);
  if (*out == nullptr) return fail(MONRES_ERR_INTERNAL, "allocation failed");
  return MONRES_OK;
}

std::string dump(const monres::OrderedJson& doc) { return doc.dump(2) + "\n"; }

}  // namespace

extern "C" {

monres_status monres_ideal_parse(const char* text, monres_ideal** out) {
  return guarded([&]() -> monres_status {
    if (text == nullptr || out == nullptr) {
      return fail(MONRES_ERR_USAGE, "null argument");
    }
    std::string_view view(text);
    auto first = view.find_first_not_of(" \t\r\n");
    monres::MonomialIdeal ideal = [&]() {
      if (first != std::string_view::npos && view[first] == '{') {
        return monres::ideal_from_json(std::string(view));
      }
      auto parsed = monres::parse_ideal_text(view);
      std::size_t raw = parsed.raw_generators.size();
      monres::MonomialIdeal result(std::move(parsed.variables),
                                   std::move(parsed.raw_generators));
      if (result.generator_count() != raw) {
        g_last_diagnostics = "input generating set was not minimal (" +
                             std::to_string(raw) + " given, " +
                             std::to_string(result.generator_count()) +
                             " kept)";
      }
      return result;
    }();
    *out = new monres_ideal{std::move(ideal)};
    return MONRES_OK;
  });
}

void monres_ideal_free(monres_ideal* ideal) { delete ideal; }

monres_status monres_ideal_render(const monres_ideal* ideal, int format,
                                  char** out) {
  return guarded([&]() -> monres_status {
    if (ideal == nullptr) return fail(MONRES_ERR_USAGE, "null ideal");
    if (format == MONRES_FORMAT_JSON) {
      return write_output(dump(monres::ideal_to_json(ideal->value)), out);
    }
    if (format == MONRES_FORMAT_TEXT) {
      return write_output(ideal->value.to_string() + "\n", out);
    }
    return fail(MONRES_ERR_USAGE, "ideal rendering supports text and json");
  });
}

monres_status monres_classify(const monres_ideal* ideal, int format,
                              char** out) {
  return guarded([&]() -> monres_status {
    if (ideal == nullptr) return fail(MONRES_ERR_USAGE, "null ideal");
    auto report = monres::classify(ideal->value);
    if (format == MONRES_FORMAT_JSON) {
      return write_output(dump(monres::classify_to_json(ideal->value, report)),
                          out);
    }
    return write_output(monres::classify_to_text(ideal->value, report), out);
  });
}

monres_status monres_betti(const monres_ideal* ideal,
                           const monres_options* options, char** out) {
  return guarded([&]() -> monres_status {
    if (ideal == nullptr) return fail(MONRES_ERR_USAGE, "null ideal");
    ParsedOptions parsed = parse_options(options);
    auto table = monres::compute_betti(ideal->value, parsed.method,
                                       parsed.field, parsed.engine);
    if (parsed.format == MONRES_FORMAT_JSON) {
      return write_output(dump(monres::betti_to_json(table)), out);
    }
    return write_output(
        monres::betti_to_text(table, ideal->value.variables()), out);
  });
}

monres_status monres_pd(const monres_ideal* ideal,
                        const monres_options* options, int* out_pd) {
  return guarded([&]() -> monres_status {
    if (ideal == nullptr || out_pd == nullptr) {
      return fail(MONRES_ERR_USAGE, "null argument");
    }
    ParsedOptions parsed = parse_options(options);
    *out_pd = monres::projective_dimension(ideal->value, parsed.method,
                                           parsed.field, parsed.engine);
    return MONRES_OK;
  });
}

monres_status monres_decompose(const monres_ideal* ideal,
                               const monres_options* options, int tree,
                               char** out) {
  return guarded([&]() -> monres_status {
    if (ideal == nullptr) return fail(MONRES_ERR_USAGE, "null ideal");
    ParsedOptions parsed = parse_options(options);
    const auto& vars = ideal->value.variables();
    if (tree != 0) {
      auto node = monres::decomposition_tree(ideal->value);
      switch (parsed.format) {
        case MONRES_FORMAT_JSON:
          return write_output(dump(monres::tree_to_json(node)), out);
        case MONRES_FORMAT_DOT:
          return write_output(monres::tree_to_dot(node, vars), out);
        default:
          return write_output(monres::tree_to_text(node, vars), out);
      }
    }
    auto terms = monres::first_decomposition(ideal->value);
    if (parsed.format == MONRES_FORMAT_JSON) {
      return write_output(dump(monres::decomposition_terms_to_json(terms)),
                          out);
    }
    return write_output(monres::decomposition_terms_to_text(terms, vars), out);
  });
}

monres_status monres_scarf(const monres_ideal* ideal,
                           const monres_options* options,
                           const char* restrict_mdeg, char** out) {
  return guarded([&]() -> monres_status {
    if (ideal == nullptr) return fail(MONRES_ERR_USAGE, "null ideal");
    ParsedOptions parsed = parse_options(options);
    const auto& vars = ideal->value.variables();
    std::vector<monres::Face> faces;
    if (restrict_mdeg != nullptr) {
      // Taylor face lattice restricted to one multidegree.
      auto target = monres::parse_monomial(restrict_mdeg, vars);
      auto complex =
          monres::build_taylor(ideal->value, parsed.engine.max_generators);
      for (monres::FaceMask mask = 0; mask < complex.face_count(); ++mask) {
        if (complex.mdeg(mask) == target) faces.push_back(complex.face(mask));
      }
    } else {
      faces = monres::build_scarf(ideal->value, parsed.engine.max_generators);
    }
    switch (parsed.format) {
      case MONRES_FORMAT_JSON:
        return write_output(dump(monres::faces_to_json(faces)), out);
      case MONRES_FORMAT_DOT:
        return write_output(monres::faces_to_dot(faces, vars), out);
      default:
        return write_output(monres::faces_to_text(faces, vars), out);
    }
  });
}

monres_status monres_verify(const monres_ideal* ideal,
                            const monres_options* options, char** out) {
  return guarded([&]() -> monres_status {
    if (ideal == nullptr) return fail(MONRES_ERR_USAGE, "null ideal");
    ParsedOptions parsed = parse_options(options);
    auto result =
        monres::verify_methods(ideal->value, parsed.field, parsed.engine);
    auto status = write_output(
        parsed.format == MONRES_FORMAT_JSON
            ? dump(monres::verify_to_json(result, parsed.field))
            : monres::verify_to_text(result, parsed.field),
        out);
    if (status != MONRES_OK) return status;
    if (!result.ok()) {
      return fail(MONRES_ERR_MISMATCH, "methods disagree");
    }
    return MONRES_OK;
  });
}

monres_status monres_verify_random(const monres_random_params* params,
                                   const monres_options* options, char** out) {
  return guarded([&]() -> monres_status {
    ParsedOptions parsed = parse_options(options);
    int count = 0;
    auto random_params = parse_random_params(params, &count);
    auto result = monres::verify_random(random_params, count,
                                        parsed.engine.seed, parsed.field,
                                        parsed.engine);
    auto status = write_output(
        parsed.format == MONRES_FORMAT_JSON
            ? dump(monres::verify_to_json(result, parsed.field))
            : monres::verify_to_text(result, parsed.field),
        out);
    if (status != MONRES_OK) return status;
    if (!result.ok()) {
      return fail(MONRES_ERR_MISMATCH, "methods disagree");
    }
    return MONRES_OK;
  });
}

monres_status monres_fuzz(const char* conjecture,
                          const monres_random_params* params, int budget,
                          const monres_options* options, char** out) {
  return guarded([&]() -> monres_status {
    if (conjecture == nullptr) {
      return fail(MONRES_ERR_USAGE, "null conjecture");
    }
    if (budget < 0) return fail(MONRES_ERR_USAGE, "negative budget");
    ParsedOptions parsed = parse_options(options);
    auto random_params = parse_random_params(params, nullptr);
    auto report = monres::fuzz_conjecture(
        monres::parse_conjecture(conjecture), random_params, budget,
        parsed.engine.seed, parsed.field, parsed.engine);
    if (parsed.format == MONRES_FORMAT_JSON) {
      return write_output(dump(monres::fuzz_report_to_json(report)), out);
    }
    return write_output(monres::fuzz_report_to_text(report), out);
  });
}

const char* monres_last_error(void) { return g_last_error.c_str(); }

const char* monres_last_diagnostics(void) {
  return g_last_diagnostics.c_str();
}

void monres_free(char* ptr) { std::free(ptr); }

const char* monres_version(void) { return "0.1.0"; }

}  // extern "C"
