import { ApiError, DialogueClient } from "./api.js";
import { questionFor } from "./templates.js";
import { alternates, deriveView, entry } from "./state.js";
import type {
  Operator,
  PlaceSlot,
  SessionState,
  TranscriptEntry,
} from "./types.js";

/** Single active session per tab, at most one in-flight request. */
class ChatApp {
  private client: DialogueClient;
  private session: SessionState | null = null;
  private transcript: TranscriptEntry[] = [];
  private inFlight = false;

  constructor(private root: Document) {
    this.client = new DialogueClient(this.serverInput().value);
  }

  private el<T extends HTMLElement>(id: string): T {
    const node = this.root.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
  }

  private serverInput(): HTMLInputElement {
    return this.el<HTMLInputElement>("server-url");
  }

  wire(): void {
    this.el<HTMLButtonElement>("connect").addEventListener("click", () => {
      void this.connect();
    });
    this.el<HTMLButtonElement>("start").addEventListener("click", () => {
      const select = this.el<HTMLSelectElement>("facts");
      void this.startConversation(Number(select.value));
    });
    void this.connect();
  }

  private async connect(): Promise<void> {
    this.client = new DialogueClient(this.serverInput().value);
    const select = this.el<HTMLSelectElement>("facts");
    select.innerHTML = "";
    try {
      const facts = await this.client.listFacts();
      for (const fact of facts) {
        const option = this.root.createElement("option");
        option.value = String(fact.index);
        option.textContent = `${fact.index}: ${fact.rendered}`;
        select.appendChild(option);
      }
      this.setStatus(`connected, ${facts.length} fact(s)`);
    } catch (err) {
      this.setStatus(`cannot reach server: ${describe(err)}`);
    }
  }

  async startConversation(factIndex: number): Promise<void> {
    if (this.inFlight) return;
    this.transcript = [];
    this.session = null;
    this.inFlight = true;
    this.render();
    try {
      this.session = await this.client.createSession(factIndex);
      this.push("engine", this.session.rendered);
    } catch (err) {
      this.push("engine", `(cannot start: ${describe(err)})`);
    } finally {
      this.inFlight = false;
      this.render();
    }
  }

  async askOperator(operator: Operator, slot: PlaceSlot | null): Promise<void> {
    if (this.inFlight || this.session === null) return;
    const question = questionFor(operator, slot, this.session.utterance);
    this.inFlight = true;
    this.push("user", question);
    this.render();
    try {
      this.session = await this.client.ask(
        this.session.session_id,
        operator,
        slot ?? undefined,
      );
      this.push("engine", this.session.rendered);
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        this.push("engine", `(nothing more to say there: ${err.message})`);
      } else {
        this.push("engine", `(request failed: ${describe(err)})`);
      }
    } finally {
      this.inFlight = false;
      this.render();
    }
  }

  private push(speaker: TranscriptEntry["speaker"], text: string): void {
    this.transcript.push(entry(speaker, text));
    if (!alternates(this.transcript)) {
      // engine error notices may double up; collapse misordering quietly
      console.warn("transcript lost alternation");
    }
  }

  private setStatus(text: string): void {
    this.el<HTMLSpanElement>("status").textContent = text;
  }

  private render(): void {
    const log = this.el<HTMLDivElement>("transcript");
    log.innerHTML = "";
    for (const item of this.transcript) {
      const bubble = this.root.createElement("div");
      bubble.className = `bubble ${item.speaker}`;
      bubble.textContent = item.text;
      log.appendChild(bubble);
    }
    log.scrollTop = log.scrollHeight;

    const view = deriveView(this.session, this.inFlight);
    const controls = this.el<HTMLDivElement>("operators");
    controls.innerHTML = "";
    for (const button of view.buttons) {
      const node = this.root.createElement("button");
      node.textContent = button.label;
      node.disabled = !button.enabled;
      node.addEventListener("click", () => {
        void this.askOperator(
          button.refinement.operator,
          button.refinement.slot,
        );
      });
      controls.appendChild(node);
    }
    this.el<HTMLSpanElement>("done-badge").hidden = !view.done;
  }
}

function describe(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

new ChatApp(document).wire();
