/** Wire types for the /api/v1 documents. Field names mirror the schemas. */

export interface PhaseDoc {
  id: string;
  ordinal: number;
}

export interface TacticDoc {
  id: string;
  name: string;
  phase: string;
  ordinal: number;
  description: string;
}

export interface TechniqueDoc {
  id: string;
  name: string;
  tactic: string;
  description: string;
  subsystems: string[];
  adversaries: string[];
  references: string[];
  severity?: number;
}

export interface TaxonomyDoc {
  version: string;
  provenance: string;
  phases: PhaseDoc[];
  tactics: TacticDoc[];
  techniques: TechniqueDoc[];
}

export interface TagDoc {
  technique: string;
  evidence: string;
  confidence: "Confirmed" | "Suspected";
}

export interface ModelDoc {
  id: string;
  title: string;
  summary: string;
  status: "Draft" | "Final";
  adversary: string[];
  taxonomy_version: string;
  tags: TagDoc[];
  sources: string[];
  created: string;
  modified: string;
  [extra: string]: unknown;
}

export interface ModelSummaryDoc {
  id: string;
  title: string;
  summary: string;
  status: string;
  adversary: string[];
  taxonomy_version: string;
  tag_count: number;
  modified: string;
}

export interface LayerDoc {
  technique: string;
  color: string;
  members: string[];
}

export interface ComparisonDoc {
  taxonomy_version: string;
  models: string[];
  cells: Record<string, string[]>;
  layers: LayerDoc[];
}

export interface GridCellDoc {
  technique: string;
  tactic_ordinal: number;
  row: number;
  count: number;
  bucket: number;
}

export interface StatsDoc {
  taxonomy_version: string;
  corpus_size: number;
  frequency: Record<string, number>;
  tactic_totals: Record<string, number>;
  unused: string[];
  grid: GridCellDoc[];
}

export interface FindingDoc {
  code: string;
  severity: "Error" | "Warning";
  subject: string;
  message: string;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  findings?: FindingDoc[];
}
