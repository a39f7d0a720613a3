/**
 * Stale-response guard: each view keeps one sequencer per fetch slot, and
 * a response is applied only if no newer request was issued meanwhile.
 */

export class RequestSequencer {
  private current = 0;

  next(): number {
    return ++this.current;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.current;
  }
}
