/*
 * Copyright 2026 The bstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bstab/bstab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "service.hpp"

struct bstab_context {
  bstab::NSLattice lattice;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_code;

bstab_status status_of(bstab::ErrorCode c) {
  using bstab::ErrorCode;
  switch (c) {
    case ErrorCode::Parse:
      return BSTAB_ERR_PARSE;
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
      return BSTAB_ERR_ARGUMENT;
    case ErrorCode::Internal:
      return BSTAB_ERR_INTERNAL;
    default:
      return BSTAB_ERR_DOMAIN;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
bstab_status guarded(F&& f) {
  g_error.clear();
  g_code.clear();
  try {
    f();
    return BSTAB_OK;
  } catch (const bstab::Error& e) {
    g_error = e.what();
    g_code = bstab::error_code_name(e.code());
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    g_code = "Parse";
    return BSTAB_ERR_PARSE;
  } catch (const std::exception& e) {
    g_error = e.what();
    g_code = "Internal";
    return BSTAB_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* bstab_version(void) { return "0.1.0"; }

const char* bstab_last_error(void) { return g_error.c_str(); }

const char* bstab_last_error_code(void) { return g_code.c_str(); }

bstab_status bstab_context_new(const char* lattice_json, bstab_context** out) {
  if (out == nullptr || lattice_json == nullptr) {
    g_error = "null argument";
    g_code = "InvalidArgument";
    return BSTAB_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = new bstab_context{bstab::lattice_from_json(bstab::parse_json(lattice_json))}; });
}

void bstab_context_free(bstab_context* ctx) { delete ctx; }

bstab_status bstab_run(bstab_context* ctx, const char* command, const char* request_json, char** out) {
  if (ctx == nullptr || command == nullptr || request_json == nullptr || out == nullptr) {
    g_error = "null argument";
    g_code = "InvalidArgument";
    return BSTAB_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    const bstab::Json res = bstab::run_command(ctx->lattice, command, bstab::parse_json(request_json));
    *out = dup(res.dump(2));
  });
}

bstab_status bstab_walls_svg(bstab_context* ctx, const char* request_json, int grid, char** out) {
  if (ctx == nullptr || request_json == nullptr || out == nullptr || grid < 1) {
    g_error = "null argument or grid < 1";
    g_code = "InvalidArgument";
    return BSTAB_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = dup(bstab::run_walls_svg(ctx->lattice, bstab::parse_json(request_json), grid)); });
}

void bstab_string_free(char* s) { std::free(s); }

}  // extern "C"
