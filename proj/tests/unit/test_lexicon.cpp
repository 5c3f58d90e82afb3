#include <gtest/gtest.h>

#include "pronounflow/lexicon.hpp"
#include "pronounflow/io.hpp"
#include "pronounflow/lexicon_data.hpp"
#include "support.hpp"

using namespace pronounflow;

TEST(Lexicon, StandardGenderAssignment) {
  const auto& lex = pftest::lexicons();
  const std::pair<const char*, Gender> expected[] = {
      {"he", Gender::masculine},   {"him", Gender::masculine}, {"his", Gender::masculine},
      {"she", Gender::feminine},   {"her", Gender::feminine},  {"hers", Gender::feminine},
      {"it", Gender::neuter},      {"its", Gender::neuter},    {"they", Gender::neutral},
      {"them", Gender::neutral},   {"their", Gender::neutral}, {"theirs", Gender::neutral},
  };
  for (const auto& [surface, gender] : expected) {
    auto entries = lex.standard.lookup(surface);
    ASSERT_FALSE(entries.empty()) << surface;
    for (const auto& e : entries) EXPECT_EQ(e.gender, gender) << surface;
  }
}

TEST(Lexicon, EveryStandardSurfaceHasOneGender) {
  const auto& table = pftest::lexicons().standard;
  for (const auto& s : table.surfaces()) {
    std::set<Gender> genders;
    for (const auto& e : table.lookup(s)) genders.insert(e.gender);
    EXPECT_EQ(genders.size(), 1u) << s;
  }
}

TEST(Lexicon, PronounInfoExamples) {
  const auto& lex = pftest::lexicons();
  auto his = pronoun_info("his", lex);
  ASSERT_TRUE(his);
  EXPECT_EQ(his->gender, Gender::masculine);
  EXPECT_EQ(his->pronoun_case, PronounCase::possessive_determiner);
  EXPECT_EQ(his->number, GrammaticalNumber::singular);
  EXPECT_FALSE(his->is_neopronoun);

  auto xyr = pronoun_info("XYR", lex);
  ASSERT_TRUE(xyr);
  EXPECT_TRUE(xyr->is_neopronoun);
  EXPECT_EQ(xyr->pronoun_case, PronounCase::possessive_determiner);

  EXPECT_FALSE(pronoun_info("table", lex));
}

TEST(Lexicon, ReflexivesPresent) {
  const auto& lex = pftest::lexicons();
  for (const char* s : {"himself", "herself", "itself", "themselves", "zirself"}) {
    auto e = pronoun_info(s, lex);
    ASSERT_TRUE(e) << s;
    EXPECT_EQ(e->pronoun_case, PronounCase::reflexive) << s;
  }
}

TEST(Lexicon, NeopronounsFromTheWild) {
  const auto& lex = pftest::lexicons();
  for (const char* s : {"xe", "ey", "ze", "xy", "xyr", "zir", "zirs", "ver", "sie", "zirself"}) {
    auto e = pronoun_info(s, lex);
    ASSERT_TRUE(e) << s;
    EXPECT_TRUE(e->is_neopronoun) << s;
    EXPECT_EQ(e->gender, Gender::neutral) << s;
  }
}

TEST(Lexicon, NeopronounsDisjointFromStandard) {
  const auto& lex = pftest::lexicons();
  for (const auto& s : lex.neopronouns.surfaces()) EXPECT_FALSE(lex.standard.contains(s)) << s;
  EXPECT_TRUE(check_lexicons(lex).empty());
}

TEST(Lexicon, NounGender) {
  const auto& g = pftest::lexicons().genders;
  EXPECT_EQ(noun_gender("waitress", g), Gender::feminine);
  EXPECT_EQ(noun_gender("dog", g), Gender::either);
  EXPECT_EQ(noun_gender("zzzz", g), Gender::unknown);
  EXPECT_EQ(noun_gender("Waitress", g), Gender::feminine);
}

TEST(Lexicon, GenderCompatibleExamples) {
  EXPECT_TRUE(gender_compatible(Gender::feminine, Gender::feminine, AgreementMode::austere));
  EXPECT_FALSE(gender_compatible(Gender::masculine, Gender::feminine, AgreementMode::austere));
  EXPECT_TRUE(gender_compatible(Gender::masculine, Gender::feminine, AgreementMode::broad));
}

TEST(Lexicon, GenderCompatibleRules) {
  for (auto g : {Gender::masculine, Gender::feminine, Gender::neuter, Gender::neutral, Gender::either}) {
    EXPECT_TRUE(gender_compatible(g, g, AgreementMode::austere)) << to_string(g);
  }
  EXPECT_TRUE(gender_compatible(Gender::masculine, Gender::either, AgreementMode::austere));
  EXPECT_TRUE(gender_compatible(Gender::feminine, Gender::either, AgreementMode::austere));
  EXPECT_FALSE(gender_compatible(Gender::neuter, Gender::either, AgreementMode::austere));
  EXPECT_FALSE(gender_compatible(Gender::neutral, Gender::either, AgreementMode::austere));
  EXPECT_TRUE(gender_compatible(Gender::neutral, Gender::either, AgreementMode::austere, true));
  EXPECT_TRUE(gender_compatible(Gender::neutral, Gender::neuter, AgreementMode::austere, true));
  EXPECT_FALSE(gender_compatible(Gender::masculine, Gender::unknown, AgreementMode::austere));
  EXPECT_TRUE(gender_compatible(Gender::masculine, Gender::unknown, AgreementMode::broad));
}

TEST(Lexicon, ShippedDataFilesMatchBuiltins) {
  EXPECT_EQ(read_file(pftest::data_path("data/gender_nouns.tsv")), std::string(builtin::kGenderNouns) + "\n");
  EXPECT_EQ(read_file(pftest::data_path("data/neopronouns.tsv")), std::string(builtin::kNeopronouns) + "\n");
  EXPECT_EQ(read_file(pftest::data_path("data/indicating_verbs.txt")),
            std::string(builtin::kIndicatingVerbs) + "\n");
  EXPECT_EQ(read_file(pftest::data_path("data/given_names.tsv")), std::string(builtin::kGivenNames) + "\n");
}

TEST(Lexicon, IndicatingVerbsSeededFromMitkov) {
  const auto& v = pftest::lexicons().indicating_verbs;
  for (const char* s : {"discuss", "present", "illustrate", "summarize", "examine", "describe", "define", "show",
                        "check", "develop", "review", "report", "outline", "consider", "investigate", "explore",
                        "assess", "analyse", "synthesize"}) {
    EXPECT_TRUE(v.contains(s)) << s;
  }
  EXPECT_FALSE(v.contains("eat"));
}

TEST(Lexicon, TableRejectsUppercaseAndDuplicates) {
  EXPECT_THROW(PronounTable({{"He", Gender::masculine, PronounCase::subject, GrammaticalNumber::singular, false}}),
               FormatError);
  EXPECT_THROW(PronounTable({{"xe", Gender::neutral, PronounCase::subject, GrammaticalNumber::singular, true},
                             {"xe", Gender::neutral, PronounCase::subject, GrammaticalNumber::singular, true}}),
               FormatError);
}

TEST(Lexicon, LoaderErrorsCarryLineNumbers) {
  try {
    PronounTable::from_tsv("xe\tneutral\tsubject\tsingular\nxem\tneutral\tobject\n", true);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(GenderLexicon::from_tsv("cat\tneuter\ncat\tneuter\n", "t"), FormatError);
  EXPECT_THROW(GenderLexicon::from_tsv("Cat\tneuter\n", "t"), FormatError);
  EXPECT_THROW(GenderLexicon::from_tsv("cat\tneutral\n", "t"), FormatError);
  EXPECT_THROW(IndicatingVerbList::from_lines("# nothing\n\n"), FormatError);
  EXPECT_THROW(Gazetteer::from_tsv("Alex\tneuter\n"), FormatError);
}

TEST(Lexicon, CollisionIsReported) {
  Lexicons lex = Lexicons::builtin();
  lex.neopronouns = PronounTable::from_tsv("she\tneutral\tsubject\tsingular\n", true);
  auto problems = check_lexicons(lex);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("she"), std::string::npos);
}

TEST(Lexicon, GazetteerNamesAndTitles) {
  const auto& names = pftest::lexicons().names;
  EXPECT_EQ(names.given_name("Babar"), Gender::masculine);
  EXPECT_EQ(names.given_name("nancy"), Gender::feminine);
  EXPECT_FALSE(names.given_name("Paris"));
  EXPECT_EQ(Gazetteer::title("Mrs."), Gender::feminine);
  EXPECT_EQ(Gazetteer::title("Mr."), Gender::masculine);
  EXPECT_FALSE(Gazetteer::title("Smith"));
  auto g = Gazetteer::from_tsv("Alex\nMaria\tfeminine\n");
  EXPECT_EQ(g.given_name("alex"), Gender::either);
  EXPECT_EQ(g.given_name("Maria"), Gender::feminine);
}
