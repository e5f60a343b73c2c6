// Copyright 2026 The kltcalc Authors
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

#include <kltcalc/flag.hpp>

int main() {
  const auto d = kltcalc::RootDatum::build(kltcalc::RootSystemSpec::parse("A2"));
  const auto p = kltcalc::parabolic(d, {0});
  return kltcalc::flag::is_klt_flag(d, p, {}).klt ? 0 : 1;
}
