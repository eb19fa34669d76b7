import type { Refinement, SessionState, TranscriptEntry } from "./types.js";
import { buttonLabel } from "./templates.js";

/** View model derived purely from the last session response.
 *
 * The client performs no inference of its own: which buttons exist, their
 * labels, and the done badge all come straight from the server state.
 */

export interface ButtonModel {
  refinement: Refinement;
  label: string;
  enabled: boolean;
}

export interface ViewModel {
  buttons: ButtonModel[];
  done: boolean;
}

export function deriveView(
  state: SessionState | null,
  inFlight: boolean,
): ViewModel {
  if (state === null) {
    return { buttons: [], done: false };
  }
  return {
    buttons: state.refinements.map((refinement) => ({
      refinement,
      label: buttonLabel(refinement),
      enabled: !inFlight,
    })),
    done: state.done,
  };
}

export function entry(
  speaker: TranscriptEntry["speaker"],
  text: string,
  now: () => number = Date.now,
): TranscriptEntry {
  return { speaker, text, timestamp: now() };
}

/** Transcript sanity: entries alternate engine/user, engine first. */
export function alternates(transcript: TranscriptEntry[]): boolean {
  return transcript.every((item, index) =>
    index === 0
      ? item.speaker === "engine"
      : item.speaker !== transcript[index - 1].speaker,
  );
}
