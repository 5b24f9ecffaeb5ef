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

#ifndef BSTAB_BSTAB_H
#define BSTAB_BSTAB_H

#include <stddef.h>

#if defined(BSTAB_BUILDING_LIBRARY)
#define BSTAB_API __attribute__((visibility("default")))
#else
#define BSTAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bstab_status {
  BSTAB_OK = 0,
  BSTAB_ERR_ARGUMENT = 1,
  BSTAB_ERR_PARSE = 2,
  BSTAB_ERR_DOMAIN = 3,
  BSTAB_ERR_INTERNAL = 4
} bstab_status;

/* A lattice together with its cached data. Not thread safe; one context per thread. */
typedef struct bstab_context bstab_context;

BSTAB_API const char* bstab_version(void);

/* Message of the last failed call on this thread, "" if none. */
BSTAB_API const char* bstab_last_error(void);

/* Error kind of the last failed call on this thread, e.g. "ZeroCharge". */
BSTAB_API const char* bstab_last_error_code(void);

/* lattice_json: {"rank": n?, "gram": [[..]], "epsilon": 1 for K3, 0 for abelian}. */
BSTAB_API bstab_status bstab_context_new(const char* lattice_json, bstab_context** out);
BSTAB_API void bstab_context_free(bstab_context* ctx);

/* Runs a command ("charge", "enumerate", "walls", "chamber", "cross",
   "jalpha", "jhat", "largevolume") on a JSON request. On success *out
   holds a JSON document to be released with bstab_string_free. */
BSTAB_API bstab_status bstab_run(bstab_context* ctx, const char* command, const char* request_json, char** out);

/* SVG rendering of the walls request with an n x n sign grid. */
BSTAB_API bstab_status bstab_walls_svg(bstab_context* ctx, const char* request_json, int grid, char** out);

BSTAB_API void bstab_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BSTAB_BSTAB_H */
