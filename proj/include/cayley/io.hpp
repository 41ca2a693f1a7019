#ifndef CAYLEY_IO_HPP
#define CAYLEY_IO_HPP

#include <string>

#include <json.hpp>

#include "cayley/group.hpp"
#include "cayley/machine.hpp"
#include "cayley/tree.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;

// Builtin names: Z<n>, Z<a>xZ<b>, S3, D4, Q8; anything else is read as a
// path to a JSON file with "labels" and "table".
FiniteGroup load_group(const std::string& source);

Json group_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json machine_json(const MealyMachine& m);

// Parses "a,b^-1,c" over the group's labels into generator letters.
std::vector<GenLetter> parse_element_word(const FiniteGroup& g, const std::string& text);

} // namespace cayley

#endif
