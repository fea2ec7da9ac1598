#include "ado/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ado/serialize.hpp"

namespace ado {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long parse_long(const std::string& s, const std::string& where) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw BraidParseError("malformed integer '" + s + "' " + where);
  }
}

}  // namespace

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 1) throw BraidParseError("strand count must be >= 1");
  BraidWord word{strands, {}};
  const std::vector<std::string> tokens = tokenize(text);
  for (size_t pos = 0; pos < tokens.size(); ++pos) {
    const std::string& tok = tokens[pos];
    const std::string where = "at token " + std::to_string(pos + 1);
    long gen = 0, power = 1;
    if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) {
      const size_t caret = tok.find('^');
      const std::string head = tok.substr(1, caret == std::string::npos
                                                 ? std::string::npos
                                                 : caret - 1);
      gen = parse_long(head, where);
      if (caret != std::string::npos)
        power = parse_long(tok.substr(caret + 1), where);
    } else {
      gen = parse_long(tok, where);
    }
    if (gen == 0 || std::abs(gen) >= strands)
      throw BraidParseError("generator index " + std::to_string(gen) +
                            " out of range for B_" + std::to_string(strands) +
                            " " + where);
    const int letter = static_cast<int>(power < 0 ? -gen : gen);
    for (long k = 0; k < std::abs(power); ++k)
      word.letters.push_back(letter);
  }
  return word;
}

std::complex<double> parse_lambda(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw BraidParseError("empty lambda");
  try {
    if (s.back() == 'i' || s.back() == 'I') {
      s.pop_back();
      // split into real and imaginary at the last +/- that is not leading
      size_t split = std::string::npos;
      for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
          split = k;
          break;
        }
      }
      if (split == std::string::npos)
        return {0.0, s.empty() || s == "+" ? 1.0 : (s == "-" ? -1.0 : std::stod(s))};
      std::string re = s.substr(0, split);
      std::string im = s.substr(split);
      if (im == "+") im = "1";
      if (im == "-") im = "-1";
      return {std::stod(re), std::stod(im)};
    }
    return {std::stod(s), 0.0};
  } catch (const std::exception&) {
    throw BraidParseError("malformed lambda '" + text + "'");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  BraidWord word;
  try {
    if (config.braidText.empty() == config.knot.empty())
      throw BraidParseError("exactly one of --braid/--knot must be given");
    if (!config.knot.empty()) {
      word = knot_by_name(config.knot);
    } else {
      if (config.strands < 1)
        throw BraidParseError("--strands is required with --braid");
      word = parse_braid(config.braidText, config.strands);
    }
    if (config.color < 2 || config.color > config.maxColor)
      throw BraidParseError("colour must satisfy 2 <= N <= " +
                            std::to_string(config.maxColor));
    if (config.method != "direct" && config.method != "topological" &&
        config.method != "both")
      throw BraidParseError("method must be direct|topological|both");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  const int N = config.color;
  std::optional<AdoResult> direct, topological;
  if (config.method != "topological") direct = ado_direct(word, N);
  if (config.method != "direct") topological = ado_topological(word, N);

  const AdoResult& primary = direct ? *direct : *topological;
  std::optional<bool> equal;
  if (direct && topological)
    equal = (direct->value == topological->value);

  std::optional<std::complex<double>> numeric;
  if (config.lambda) {
    try {
      numeric = specialize_invariant(primary, *config.lambda);
    } catch (const DegenerateSpecialization& e) {
      err << "error: " << e.what() << "\n";
      return kExitDegenerate;
    }
  }

  if (config.format == "json") {
    nlohmann::json j;
    j["n"] = word.strands;
    j["N"] = N;
    j["writhe"] = writhe(word);
    j["method"] = config.method;
    j["value"] = to_json(primary.value);
    j["tExp"] = primary.rawTExp;
    if (equal) j["equal"] = *equal;
    if (numeric) j["valueAtLambda"] = {numeric->real(), numeric->imag()};
    out << j.dump(2) << "\n";
  } else {
    out << "braid: " << word.to_string() << "\n";
    out << "N: " << N << "  writhe: " << writhe(word) << "\n";
    if (direct) out << "direct:      " << direct->value.to_string() << "\n";
    if (topological)
      out << "topological: " << topological->value.to_string() << "\n";
    if (equal) out << "equal: " << (*equal ? "true" : "false") << "\n";
    if (numeric) {
      out << "value at lambda = " << config.lambda->real();
      if (config.lambda->imag() != 0.0)
        out << (config.lambda->imag() < 0 ? " - " : " + ")
            << std::abs(config.lambda->imag()) << "i";
      out << ": " << numeric->real()
          << (numeric->imag() < 0 ? " - " : " + ") << std::abs(numeric->imag())
          << "i\n";
    }
  }

  if (equal && !*equal) {
    err << "error: pipelines disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace ado
