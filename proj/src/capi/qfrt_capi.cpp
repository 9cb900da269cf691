// Copyright 2026 The qfrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfrt/qfrt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cli/commands.hpp"
#include "cli/format.hpp"

struct qfrt_report {
  qfrt::CommandResult result;
};

struct qfrt_presentation {
  qfrt::Presentation presentation;
};

namespace {

thread_local std::string lastError;

qfrt_status fail(qfrt_status s, std::string message) {
  lastError = std::move(message);
  return s;
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
qfrt_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qfrt::InputError& e) {
    return fail(QFRT_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QFRT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QFRT_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* qfrt_version(void) { return "0.1.0"; }

const char* qfrt_last_error(void) { return lastError.c_str(); }

qfrt_status qfrt_run(const char* subcommand, const char* input, const qfrt_run_options* options, qfrt_report** out) {
  if (!subcommand || !input || !out) return fail(QFRT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    qfrt::RunOptions opts;
    if (options) {
      opts.maxDeg = options->max_deg;
      if (options->expect) opts.expect = options->expect;
      if (options->phi) opts.phi = options->phi;
    }
    *out = new qfrt_report{qfrt::run(subcommand, input, opts)};
    return QFRT_OK;
  });
}

int qfrt_report_exit_code(const qfrt_report* report) { return report ? report->result.exitCode : qfrt::kExitInternal; }

char* qfrt_report_json(const qfrt_report* report, int with_timing) {
  if (!report) return nullptr;
  return copyString(qfrt::renderJson(report->result, with_timing != 0));
}

char* qfrt_report_text(const qfrt_report* report, int with_timing) {
  if (!report) return nullptr;
  return copyString(qfrt::renderText(report->result, with_timing != 0));
}

void qfrt_report_free(qfrt_report* report) { delete report; }

qfrt_status qfrt_presentation_parse(const char* text, qfrt_presentation** out) {
  if (!text || !out) return fail(QFRT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new qfrt_presentation{qfrt::parsePresentation(text)};
    return QFRT_OK;
  });
}

char* qfrt_presentation_serialize(const qfrt_presentation* p) {
  if (!p) return nullptr;
  return copyString(qfrt::serializePresentation(p->presentation));
}

size_t qfrt_presentation_relation_count(const qfrt_presentation* p) { return p ? p->presentation.relations.size() : 0; }

qfrt_status qfrt_presentation_ideal_equals(const qfrt_presentation* a, const qfrt_presentation* b, int max_deg,
                                            qfrt_answer* out) {
  if (!a || !b || !out) return fail(QFRT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& pa = a->presentation;
    const auto& pb = b->presentation;
    if (pa.dim != pb.dim || pa.withDInverse != pb.withDInverse)
      return fail(QFRT_ERR_INPUT, "presentations have different generators");
    const auto eq = qfrt::idealEquals(pa.relations, pb.relations, pa.alphabet(), max_deg);
    *out = eq.answer == qfrt::Answer::Yes ? QFRT_YES : eq.answer == qfrt::Answer::No ? QFRT_NO : QFRT_UNKNOWN;
    return QFRT_OK;
  });
}

void qfrt_presentation_free(qfrt_presentation* p) { delete p; }

void qfrt_string_free(char* s) { std::free(s); }

}  // extern "C"
