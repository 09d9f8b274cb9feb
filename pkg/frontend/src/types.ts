/**
 * Payload types mirroring the facultas service JSON bodies one to one.
 * The UI never computes scores itself; these shapes are the single source
 * of every number rendered.
 */

export interface FacultySchema {
  faculty_name: string;
  courses: string[];
  bsc_domain: string[];
  msc_domain: string[];
  phd_domain: string[];
  experience_unit: 'years' | 'semesters';
  experience_max: number;
}

export interface QuestionnaireRow {
  course: string;
  bsc_req: string[];
  msc_req: string[];
  phd_req: string[];
  required_taught: string[];
  min_experience: number;
}

export interface Questionnaire {
  expert_id: string;
  rows: QuestionnaireRow[];
}

export interface ExpertProfile {
  expert_id: string;
  per_course_experience: Record<string, number>;
}

export interface ExpertEntry {
  questionnaire: Questionnaire;
  profile: ExpertProfile;
}

export interface WeightConfig {
  threshold: number;
  floor: number;
  peak: number;
  spread: number;
}

export interface KbDoc {
  schema: FacultySchema;
  experts: ExpertEntry[];
  weight_config: WeightConfig;
  rule_mode: 'direct' | 'tree';
  compiled?: unknown;
}

export interface CandidateRecord {
  candidate_id: string;
  bsc: string;
  msc: string | null;
  phd: string | null;
  taught: string[];
  experience: number;
}

export interface AntecedentTrace {
  description: string;
  satisfied: boolean;
}

export interface RuleTrace {
  rule_id: string;
  consequent: string;
  score: number;
  antecedent_count: number;
  antecedents: AntecedentTrace[];
}

export interface FiringTrace {
  expert_id: string;
  rules: RuleTrace[];
  course_scores: Record<string, number>;
}

export interface ExpertVote {
  expert_id: string;
  recommended: string | null;
  weighted_scores: Record<string, number>;
  weights: Record<string, number>;
  firing: FiringTrace;
}

export interface Recommendation {
  candidate_id: string;
  final: string | null;
  vote_counts: Record<string, number>;
  tie_break: string | null;
  votes: ExpertVote[];
}

export interface Standing {
  candidate_id: string;
  votes_for_course: number;
  summed_weighted_score: number;
}

export interface Assignment {
  course: string;
  selected: string | null;
  candidates: Standing[];
}

export interface Health {
  status: string;
  revision: number;
}
