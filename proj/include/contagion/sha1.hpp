// Copyright 2026 The Contagion Authors
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

#ifndef CONTAGION_SHA1_HPP
#define CONTAGION_SHA1_HPP

#include <string>
#include <string_view>

namespace contagion {

// Hex SHA-1 digest of the bytes.
std::string sha1_hex(std::string_view bytes);

// Git blob object id of the bytes: sha1("blob <len>\0" + bytes). Used to
// fingerprint input logs in run manifests.
std::string git_blob_sha1(std::string_view bytes);

}  // namespace contagion

#endif  // CONTAGION_SHA1_HPP
