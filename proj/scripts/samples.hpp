#pragma once

// Bank-building routines for the sample scripts. Each <name>.cpp wraps one
// of these in a main(); the tests call them directly.

#include "qbank/bank.hpp"
#include "qbank/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace samples {

// Inclusive bounds, like Python's random.randint.
inline int randint(qbank::Rng& rng, int lo, int hi)
{
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

// Calculus: pick the derivative of a function.
inline std::vector<std::pair<std::string, std::string>> derivative_pairs()
{
  return {
    {R"(\cos(x^2))", R"(\(-2x\sin(x^2)\))"},
    {R"(2x\sin(x))", R"(\(2x\cos(x) + 2\sin(x)\))"},
    {R"(\sin(x)\cos(x))", R"(\(-\sin^2(x) + \cos^2(x)\))"},
    {R"(2\sin(\cos(x)))", R"(\(-2\sin(x)\cos(\cos(x))\))"},
    {R"(\sin(2x))", R"(\(2\cos(2x)\))"},
    {R"(\tan(2x))", R"(\(2\tan^2(2x) + 2\))"},
  };
}

inline std::size_t build_derivatives(qbank::QuestionBank& bank)
{
  return qbank::add_multiple_choice_from_pairs(bank, "Derivatives", R"(Select the derivative of \(%s\))",
                                               derivative_pairs());
}

// One numerical, one multiple-choice and one matching question.
inline void build_mixed_types(qbank::QuestionBank& bank)
{
  auto& rng = bank.rng();
  int a = randint(rng, 2, 6);
  int b = randint(rng, 1, 9);
  int x = randint(rng, 3, 8);
  int c = -a * x * x - b * x;
  double other = (-b - std::sqrt(static_cast<double>(b * b - 4 * a * c))) / (2.0 * a);
  std::vector<double> solutions{static_cast<double>(x), other};

  std::vector<int> distractors;
  for (int candidate : {x - 1, x + 1, x - 2, x + 2}) {
    if (candidate != x && static_cast<double>(candidate) != other) {
      distractors.push_back(candidate);
    }
  }
  std::string equation = std::to_string(a) + "x^2+" + std::to_string(b) + "x" + std::to_string(c) + "=0";
  bank.add_numerical("", "Solve \\( " + equation + " \\)", solutions);

  std::vector<int> choices{x};
  choices.insert(choices.end(), distractors.begin(), distractors.end());
  bank.add_multiple_choice("", "Select a solution for \\(" + equation + "\\)", choices);

  bank.add_matching("", "Match magnitudes with units:",
                    {{"Flux", "W"}, {"Intensity", "W/sr"}, {"Irradiance", "W/m^2"}, {"Radiance", "W/(sr*m^2)"}});
}

struct ShaderTasks
{
  std::vector<std::string> only_vs{"Write gl_Position.", "Write to an out variable with texture coordinates.",
                                   "Animate the geometry of the 3D model.", "Compute per-vertex lighting."};
  std::vector<std::string> only_fs{"Call dFdx, dFdy functions.", "Execute discard.", "Write fragColor.",
                                   "Read gl_FragCoord.", "Write gl_FragDepth.", "Apply bump mapping.",
                                   "Apply normal mapping."};
  std::vector<std::string> both{"Compute the light vector.", "Compute lighting."};
  std::vector<std::string> none{"Write to gl_FragCoord.", "Create new primitives.", "Create new fragments."};

  template <typename... Lists>
  static std::vector<std::string> join(const Lists&... lists)
  {
    std::vector<std::string> out;
    (out.insert(out.end(), lists.begin(), lists.end()), ...);
    return out;
  }

  // Vertex-shader question: c = 6, d = 10.
  std::vector<std::string> vs_correct() const { return join(only_vs, both); }
  std::vector<std::string> vs_distractors() const { return join(only_fs, none); }
  // Fragment-shader question: c = 9, d = 7.
  std::vector<std::string> fs_correct() const { return join(only_fs, both); }
  std::vector<std::string> fs_distractors() const { return join(only_vs, none); }
};

inline std::size_t build_shader_tasks(qbank::QuestionBank& bank)
{
  ShaderTasks tasks;
  const std::string question = "Select the task that makes sense in a GLSL ";
  std::size_t n = qbank::add_multiple_choice_from_lists(bank, "", question + "<b>Vertex Shader</b>:",
                                                         tasks.vs_correct(), tasks.vs_distractors());
  n += qbank::add_multiple_choice_from_lists(bank, "", question + "<b>Fragment Shader</b>:", tasks.fs_correct(),
                                             tasks.fs_distractors());
  return n;
}

inline std::vector<std::pair<std::string, std::string>> kajiya_pairs()
{
  const std::string lo = R"(L_o(x, \omega_o, \lambda ,t))";
  const std::string le = R"(L_e(x, \omega_o, \lambda ,t))";
  const std::string li = R"(L_i(x, \omega_i, \lambda ,t))";
  const std::string fr = R"(f_r(x, \omega_i, \omega _o, \lambda,t))";
  const std::string dot = R"((\omega_i \cdot n))";
  return {
    {lo, "Exiting radiance."},
    {le, "Emitted radiance."},
    {li, "Incident radiance."},
    {fr, "Material's BRDF."},
    {dot, "Cosine of incident angle."},
    {R"(\lambda)", "Radiant energy wavelength."},
    {R"(\Omega)", "Unit hemisphere."},
  };
}

inline std::vector<std::string> kajiya_distractors()
{
  return {"Irradiance.", "Illuminance.", "Intensity.", "Incident direction."};
}

inline std::string kajiya_pattern()
{
  const auto pairs = kajiya_pairs();
  const std::string equation = "$$" + pairs[0].first + " = " + pairs[1].first + R"(\ + \int_\Omega )"
                               + pairs[3].first + pairs[2].first + pairs[4].first + R"(d\omega_i$$)";
  return "Kajiya's rendering equation can be written in the form " + equation + R"(. <p> What is \(%s\)?)";
}

inline std::size_t build_rendering_equation(qbank::QuestionBank& bank)
{
  return qbank::add_multiple_choice_from_pairs(bank, "", kajiya_pattern(), kajiya_pairs(), kajiya_distractors());
}

inline std::vector<int> primes_below(int limit)
{
  std::vector<bool> composite(static_cast<std::size_t>(limit), false);
  std::vector<int> primes;
  for (int i = 2; i < limit; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      for (long j = static_cast<long>(i) * i; j < limit; j += i) {
        composite[static_cast<std::size_t>(j)] = true;
      }
    }
  }
  return primes;
}

// 3-digit primes, with odd composites not divisible by 5 as distractors.
inline std::size_t build_primes(qbank::QuestionBank& bank)
{
  constexpr int limit = 999;
  auto primes = primes_below(limit + 1);
  std::vector<int> three_digit(primes.begin() + 25, primes.end());
  std::vector<int> distractors;
  for (int n = 100; n < limit; ++n) {
    bool prime = std::binary_search(primes.begin(), primes.end(), n);
    if (!prime && n % 2 != 0 && n % 5 != 0) {
      distractors.push_back(n);
    }
  }
  std::size_t added =
    qbank::add_multiple_choice_from_lists(bank, "", "Select the <b> prime </b> number:", three_digit, distractors, 5);
  bank.add_numerical("", "Enter a 3-digit prime number:",
                     std::vector<double>(three_digit.begin(), three_digit.end()));
  return added + 1;
}

inline const char* vertex_shader()
{
  return R"(
    void main()
    {
        vec3 P = (modelViewMatrix * vec4(vertex, 1.0)).xyz;
        vec3 N = normalize(normalMatrix * normal);
        vec3 V = normalize(-P);
        vec3 L = normalize(lightPosition.xyz - P);
        frontColor = PhongLight(N , V , L);
        gl_Position = modelViewProjectionMatrix * vec4(vertex, 1.0);
    }
)";
}

inline std::vector<std::string> shader_tokens()
{
  return {"modelViewMatrix", "modelViewProjectionMatrix", "normalMatrix"};
}

inline std::vector<std::string> shader_distractors()
{
  return {"viewMatrix", "viewProjectionMatrix", "modelViewMatrixInverse"};
}

inline std::size_t build_complete_shader(qbank::QuestionBank& bank)
{
  return qbank::add_complete_code(bank, "", "Complete this vertex shader: <p> <pre>%s</pre>", vertex_shader(),
                                  shader_tokens(), shader_distractors());
}

} // namespace samples
