/** Wire types for the dialogue API; the JSON schema is the whole contract. */

export type Operator = "HOW" | "WHICH_PART" | "WHICH_KIND";
export type PlaceSlot = "in" | "from" | "to";
export type TenseName = "past" | "present" | "future";

export interface AtomRecord {
  subject: string;
  negated: boolean;
  verb: string;
  object: string | null;
  places: { in: string | null; from: string | null; to: string | null };
  tense: TenseName;
  condition: string | null;
  adverb: string | null;
  can: boolean;
  rendered: string;
}

export interface Refinement {
  operator: Operator;
  slot: PlaceSlot | null;
}

export interface SessionState {
  session_id: string;
  utterance: AtomRecord;
  rendered: string;
  refinements: Refinement[];
  done: boolean;
}

export interface FactInfo {
  index: number;
  rendered: string;
}

export interface TranscriptEntry {
  speaker: "engine" | "user";
  text: string;
  timestamp: number;
}
