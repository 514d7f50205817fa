#include "specforge.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>

#include "error.hpp"
#include "reader.hpp"
#include "session.hpp"

struct sf_session {
  specforge::Session impl;
  std::string last_error;
};

namespace {

char *dup_string(const std::string& s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sf_status status_of(specforge::ErrKind kind) {
  using specforge::ErrKind;
  switch (kind) {
    case ErrKind::Parse: return SF_ERR_PARSE;
    case ErrKind::Admit: return SF_ERR_ADMIT;
    case ErrKind::Eval: return SF_ERR_EVAL;
    case ErrKind::Query: return SF_ERR_QUERY;
    case ErrKind::BadArg: return SF_ERR_USAGE;
    case ErrKind::Io: return SF_ERR_IO;
  }
  return SF_ERR_INTERNAL;
}

template <typename F>
sf_status guarded(sf_session *s, F&& body) {
  if (!s) return SF_ERR_USAGE;
  try {
    body();
    s->last_error.clear();
    return SF_OK;
  } catch (const specforge::Error& e) {
    s->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return SF_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

sf_session *sf_session_new(void) {
  try {
    return new sf_session();
  } catch (...) {
    return nullptr;
  }
}

void sf_session_free(sf_session *s) { delete s; }

sf_status sf_set_fuel(sf_session *s, long fuel) {
  return guarded(s, [&] { s->impl.set_fuel(fuel); });
}

sf_status sf_set_flag(sf_session *s, const char *name, int enabled) {
  if (!name) return SF_ERR_USAGE;
  return guarded(s, [&] { s->impl.set_flag(name, enabled != 0); });
}

sf_status sf_load_file(sf_session *s, const char *path, char **report_out) {
  if (!path) return SF_ERR_USAGE;
  return guarded(s, [&] {
    std::string report = s->impl.load_file(path);
    if (report_out) *report_out = dup_string(report);
  });
}

sf_status sf_submit(sf_session *s, const char *input, char **output_out) {
  if (!input) return SF_ERR_USAGE;
  return guarded(s, [&] {
    std::string out = s->impl.submit(input);
    if (output_out) *output_out = dup_string(out);
  });
}

sf_status sf_deps(sf_session *s, const char *spec, char **listing_out) {
  if (!spec) return SF_ERR_USAGE;
  return guarded(s, [&] {
    std::string up;
    for (const char *p = spec; *p; p++)
      up += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    std::string out = s->impl.deps_listing(up);
    if (listing_out) *listing_out = dup_string(out);
  });
}

sf_status sf_deps_dot(sf_session *s, const char *spec, char **dot_out) {
  if (!spec) return SF_ERR_USAGE;
  return guarded(s, [&] {
    std::string up;
    for (const char *p = spec; *p; p++)
      up += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    std::string out = s->impl.deps_dot(up);
    if (dot_out) *dot_out = dup_string(out);
  });
}

const char *sf_last_error(const sf_session *s) {
  return s ? s->last_error.c_str() : "null session";
}

int sf_input_complete(const char *text) {
  return text && specforge::input_complete(text) ? 1 : 0;
}

void sf_string_free(char *s) { std::free(s); }

const char *sf_version(void) { return "0.1.0"; }

}  // extern "C"
