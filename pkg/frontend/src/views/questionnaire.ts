/**
 * Questionnaire editor: one requirements grid per expert, inputs constrained
 * to the schema domains. Edits live in a draft copy; nothing reaches the
 * server until Save issues a single whole-document PUT with the revision
 * the editor was opened at. A concurrent edit surfaces as a reload prompt.
 */

import { el } from '../dom.js';
import { ApiClient, ApiError, KbSnapshot } from '../api.js';
import type { ExpertEntry, KbDoc, QuestionnaireRow } from '../types.js';

export interface QuestionnaireEditor {
  element: HTMLElement;
  draft(): KbDoc;
}

function cloneDoc(doc: KbDoc): KbDoc {
  return JSON.parse(JSON.stringify(doc)) as KbDoc;
}

function multiSelect(
  values: string[],
  domain: string[],
  onChange: (selected: string[]) => void,
): HTMLSelectElement {
  const select = el('select', { multiple: 'multiple', size: String(Math.min(domain.length, 4)) });
  for (const value of domain) {
    const option = el('option', { value }, [value]);
    option.selected = values.includes(value);
    select.append(option);
  }
  select.addEventListener('change', () => {
    onChange(Array.from(select.selectedOptions).map((o) => o.value));
  });
  return select;
}

function taughtPicker(
  row: QuestionnaireRow,
  courses: string[],
): HTMLElement {
  const boxes = courses.map((course) => {
    const box = el('input', { type: 'checkbox', value: course });
    box.checked = row.required_taught.includes(course);
    box.addEventListener('change', () => {
      const kept = new Set(row.required_taught);
      if (box.checked) kept.add(course);
      else kept.delete(course);
      row.required_taught = courses.filter((c) => kept.has(c));
    });
    return el('label', { class: 'taught-option' }, [box, course]);
  });
  return el('div', { class: 'taught-grid' }, boxes);
}

function rowEditor(row: QuestionnaireRow, doc: KbDoc): HTMLElement {
  const schema = doc.schema;
  const minExp = el('input', {
    type: 'number',
    min: '0',
    step: 'any',
    value: String(row.min_experience),
    'data-course': row.course,
    name: 'min_experience',
  });
  minExp.addEventListener('change', () => {
    row.min_experience = Number(minExp.value || 0);
  });
  return el('tr', { 'data-row': row.course }, [
    el('th', { class: 'course-name' }, [row.course]),
    el('td', {}, [multiSelect(row.bsc_req, schema.bsc_domain, (v) => (row.bsc_req = v))]),
    el('td', {}, [multiSelect(row.msc_req, schema.msc_domain, (v) => (row.msc_req = v))]),
    el('td', {}, [multiSelect(row.phd_req, schema.phd_domain, (v) => (row.phd_req = v))]),
    el('td', {}, [taughtPicker(row, schema.courses)]),
    el('td', {}, [minExp]),
  ]);
}

function profileEditor(entry: ExpertEntry, courses: string[]): HTMLElement {
  const cells = courses.map((course) => {
    const input = el('input', {
      type: 'number',
      min: '0',
      step: 'any',
      name: 'profile_experience',
      'data-course': course,
      value: String(entry.profile.per_course_experience[course] ?? 0),
    });
    input.addEventListener('change', () => {
      entry.profile.per_course_experience[course] = Number(input.value || 0);
    });
    return el('td', {}, [input]);
  });
  return el('table', { class: 'profile-grid' }, [
    el('thead', {}, [el('tr', {}, [el('th', {}, ['Taught for…']), ...courses.map((c) => el('th', {}, [c]))])]),
    el('tbody', {}, [el('tr', {}, [el('th', {}, ['years']), ...cells])]),
  ]);
}

function expertEditor(entry: ExpertEntry, doc: KbDoc): HTMLElement {
  const grid = el('table', { class: 'questionnaire-grid' }, [
    el('thead', {}, [
      el('tr', {}, [
        el('th', {}, ['Course']),
        el('th', {}, ["B.Sc. any of"]),
        el('th', {}, ["M.Sc. any of"]),
        el('th', {}, ['PhD any of']),
        el('th', {}, ['Must have taught']),
        el('th', {}, ['Min experience']),
      ]),
    ]),
    el('tbody', {}, entry.questionnaire.rows.map((row) => rowEditor(row, doc))),
  ]);
  return el('section', { class: 'expert-editor', 'data-expert': entry.questionnaire.expert_id }, [
    el('h3', {}, [`Expert ${entry.questionnaire.expert_id}`]),
    grid,
    profileEditor(entry, doc.schema.courses),
  ]);
}

export function questionnaireEditor(
  snapshot: KbSnapshot,
  api: ApiClient,
  onSaved: (saved: KbSnapshot) => void,
): QuestionnaireEditor {
  const draft = cloneDoc(snapshot.doc);
  const status = el('p', { class: 'save-status', role: 'status' });
  const errors = el('ul', { class: 'errors', role: 'alert' });
  const stale = el('p', { class: 'stale-prompt', role: 'alert' });

  const save = el('button', { type: 'button', class: 'save' }, ['Save questionnaire']);
  save.addEventListener('click', async () => {
    errors.replaceChildren();
    stale.textContent = '';
    status.textContent = '';
    try {
      const revision = await api.putKb(draft, snapshot.revision);
      status.textContent = 'Saved.';
      onSaved({ doc: cloneDoc(draft), revision });
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        stale.textContent =
          'Someone else changed the knowledge base; reload to pick up their edits.';
      } else if (error instanceof ApiError) {
        for (const violation of error.violations) {
          errors.append(el('li', {}, [violation]));
        }
      } else {
        throw error;
      }
    }
  });

  const element = el('section', { class: 'questionnaire-editor' }, [
    el('h2', {}, ['Expert questionnaires']),
    el('p', { class: 'hint' }, [
      'Edits stay local until saved; Save replaces the whole knowledge base at the revision you loaded.',
    ]),
    ...draft.experts.map((entry) => expertEditor(entry, draft)),
    save,
    status,
    stale,
    errors,
  ]);

  return { element, draft: () => draft };
}
