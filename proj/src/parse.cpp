#include "hecke/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

int parse_int(const std::string& token, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw DomainError(std::string("cannot read ") + what + " from '" + token + "'");
  }
  if (pos != token.size())
    throw DomainError(std::string("trailing characters after ") + what + " in '" + token + "'");
  return value;
}

Permutation parse_word(int kappa, const std::string& text) {
  std::vector<int> letters;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.erase(token.begin());
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.pop_back();
    if (token.empty() || token.front() != 's')
      throw DomainError("word letters look like s2,s1; got '" + token + "'");
    letters.push_back(parse_int(token.substr(1), "generator index"));
  }
  if (letters.empty()) throw DomainError("empty generator word");
  return from_word(kappa, letters);
}

Permutation parse_one_line(int kappa, const std::string& text) {
  std::vector<int> images;
  std::stringstream stream(text);
  std::string token;
  while (stream >> token) images.push_back(parse_int(token, "one-line entry"));
  if (static_cast<int>(images.size()) != kappa)
    throw DomainError("one-line notation needs exactly kappa entries");
  return Permutation(std::move(images));
}

Permutation parse_json_array(int kappa, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON permutation: ") + e.what());
  }
  if (!j.is_array()) throw DomainError("JSON permutation must be an array");
  std::vector<int> images;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DomainError("JSON permutation entries must be integers");
    images.push_back(v.get<int>());
  }
  if (static_cast<int>(images.size()) != kappa)
    throw DomainError("JSON permutation needs exactly kappa entries");
  return Permutation(std::move(images));
}

}  // namespace

Permutation parse_permutation(int kappa, const std::string& text) {
  if (kappa < 1) throw DomainError("kappa must be positive");
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw DomainError("empty permutation");
  if (text[first] == '[') return parse_json_array(kappa, text);
  if (text[first] == 's') return parse_word(kappa, text.substr(first));
  return parse_one_line(kappa, text);
}

}  // namespace hecke
