// Copyright 2026 The schmidtcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>

namespace schmidtcert {

/// Worker count: hardware concurrency capped by the SCHMIDT_CERT_THREADS
/// environment variable. Always at least 1.
int thread_budget();

/// Run body(i) for i in [0, n). Work is split across thread_budget() threads;
/// bodies must not share mutable state except through their own index slot.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace schmidtcert
