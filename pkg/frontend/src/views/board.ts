/**
 * Assignment board: one column per course; each suggests the best
 * instructor from the entered candidate roster via POST /assign.
 */

import { el, clear } from '../dom.js';
import { ApiClient } from '../api.js';
import type { Assignment, CandidateRecord, FacultySchema } from '../types.js';

function standingsList(assignment: Assignment): HTMLElement {
  const items = assignment.candidates.map((standing) =>
    el('li', { 'data-candidate': standing.candidate_id }, [
      `${standing.candidate_id}: ${standing.votes_for_course} vote(s), score ${standing.summed_weighted_score}`,
    ]),
  );
  return el('ul', { class: 'standings' }, items);
}

export function assignmentBoard(
  schema: FacultySchema,
  api: ApiClient,
  roster: () => CandidateRecord[],
): HTMLElement {
  const columns = schema.courses.map((course) => {
    const result = el('div', { class: 'column-result' });
    const button = el('button', { type: 'button' }, ['Suggest instructor']);
    button.addEventListener('click', async () => {
      const candidates = roster();
      clear(result);
      if (!candidates.length) {
        result.append(el('p', { class: 'hint' }, ['Enter candidates first.']));
        return;
      }
      const assignment = await api.assign(course, candidates);
      result.append(
        el('p', { class: 'selected', 'data-selected': assignment.selected ?? '' }, [
          assignment.selected ? `Selected: ${assignment.selected}` : 'Nobody qualifies yet.',
        ]),
        standingsList(assignment),
      );
    });
    return el('div', { class: 'board-column', 'data-course': course }, [
      el('h3', {}, [course]),
      button,
      result,
    ]);
  });
  return el('section', { class: 'assignment-board' }, [
    el('h2', {}, ['Assignment board']),
    el('div', { class: 'board-columns' }, columns),
  ]);
}
