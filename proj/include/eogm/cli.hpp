/*
 * Copyright 2026 The EOGM Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EOGM_CLI_HPP
#define EOGM_CLI_HPP

namespace eogm {

/// Toolkit entry point. Exit codes: 0 success; 1 unexpected failure;
/// 2 file/IO errors; 3 malformed input files; 4 invalid parameter
/// combinations; CLI11's own codes (>= 100) for usage errors.
int run_cli(int argc, const char* const* argv);

}  // namespace eogm

#endif  // EOGM_CLI_HPP
