/**
 * Candidate entry form: the five feature fields, domain-constrained.
 * Server validation problems land inline at the offending field.
 */

import { el } from '../dom.js';
import type { CandidateRecord, FacultySchema } from '../types.js';

export interface CandidateForm {
  element: HTMLElement;
  read(): CandidateRecord;
  showErrors(violations: string[]): void;
  clearErrors(): void;
}

function degreeSelect(
  name: string,
  domain: string[],
  optional: boolean,
): HTMLSelectElement {
  const select = el('select', { name });
  if (optional) {
    select.append(el('option', { value: '' }, ['(none)']));
  }
  for (const value of domain) {
    select.append(el('option', { value }, [value]));
  }
  return select;
}

function field(name: string, label: string, input: HTMLElement): HTMLElement {
  return el('div', { class: 'field', 'data-field': name }, [
    el('label', {}, [label, input]),
    el('span', { class: 'field-error', role: 'alert' }),
  ]);
}

export function candidateForm(
  schema: FacultySchema,
  onSubmit: (candidate: CandidateRecord) => void,
): CandidateForm {
  const id = el('input', { name: 'candidate_id', type: 'text', placeholder: 'id' });
  const bsc = degreeSelect('bsc', schema.bsc_domain, false);
  const msc = degreeSelect('msc', schema.msc_domain, true);
  const phd = degreeSelect('phd', schema.phd_domain, true);
  const experience = el('input', {
    name: 'experience',
    type: 'number',
    min: '0',
    max: String(schema.experience_max),
    step: 'any',
    value: '0',
  });

  const taughtBoxes = schema.courses.map((course) =>
    el('label', { class: 'taught-option' }, [
      el('input', { type: 'checkbox', name: 'taught', value: course }),
      course,
    ]),
  );

  const errorList = el('ul', { class: 'errors', role: 'alert' });
  const element = el('form', { class: 'candidate-form' }, [
    field('candidate_id', 'Candidate id', id),
    field('bsc', "Bachelor's field", bsc),
    field('msc', "Master's field", msc),
    field('phd', 'Doctorate field', phd),
    field('taught', 'Courses taught before', el('div', { class: 'taught-grid' }, taughtBoxes)),
    field(
      'experience',
      `Teaching experience (${schema.experience_unit})`,
      experience,
    ),
    errorList,
    el('button', { type: 'submit' }, ['Get recommendation']),
  ]);

  const form = element as HTMLFormElement;

  function read(): CandidateRecord {
    const taught = Array.from(
      form.querySelectorAll<HTMLInputElement>('input[name=taught]:checked'),
    ).map((box) => box.value);
    return {
      candidate_id: id.value.trim(),
      bsc: bsc.value,
      msc: msc.value || null,
      phd: phd.value || null,
      taught,
      experience: Number(experience.value || 0),
    };
  }

  function clearErrors(): void {
    errorList.replaceChildren();
    for (const span of form.querySelectorAll('.field-error')) {
      span.textContent = '';
    }
  }

  function showErrors(violations: string[]): void {
    clearErrors();
    for (const violation of violations) {
      const name = violation.split(':', 1)[0].trim();
      const slot = form.querySelector(`[data-field="${name}"] .field-error`);
      if (slot) {
        slot.textContent = violation.slice(name.length + 1).trim();
      } else {
        errorList.append(el('li', {}, [violation]));
      }
    }
  }

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    clearErrors();
    onSubmit(read());
  });

  return { element, read, showErrors, clearErrors };
}
